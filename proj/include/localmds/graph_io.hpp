#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "localmds/graph.hpp"

namespace localmds {

/// Text format (bit-exact):
///   p <n> <m>
///   c <key>=<value>        zero or more metadata lines
///   e <u> <v>              m lines, u < v, sorted
///   vw <v> <num>/<den>     explicit vertex weights, when present
///   ew <u> <v> <num>/<den> explicit edge weights, when present
/// Vertex ids are 0..n-1 (the generator convention); unweighted entries
/// default to weight 1.
struct GraphFile {
  Graph graph;
  std::map<std::string, std::string> metadata;
};

void write_graph(std::ostream& out, const Graph& g,
                 const std::map<std::string, std::string>& metadata = {});
GraphFile read_graph(std::istream& in);

void write_graph_file(const std::string& path, const Graph& g,
                      const std::map<std::string, std::string>& metadata = {});
GraphFile read_graph_file(const std::string& path);

}  // namespace localmds
