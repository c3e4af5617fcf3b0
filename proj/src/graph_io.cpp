#include "localmds/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace localmds {

void write_graph(std::ostream& out, const Graph& g,
                 const std::map<std::string, std::string>& metadata) {
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    if (g.vertices()[i] != static_cast<VertexId>(i))
      throw std::invalid_argument(
          "write_graph: vertex ids must be dense 0..n-1");
  out << "p " << n << " " << g.edge_count() << "\n";
  for (const auto& [k, v] : metadata) out << "c " << k << "=" << v << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
  if (g.has_vertex_weights())
    for (VertexId v : g.vertices())
      out << "vw " << v << " " << g.vertex_weight(v).str() << "\n";
  if (g.has_edge_weights())
    for (const Edge& e : g.edges())
      out << "ew " << e.u << " " << e.v << " "
          << g.edge_weight(e.u, e.v).str() << "\n";
}

GraphFile read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("read_graph: line " + std::to_string(lineno) +
                                ": " + why);
  };

  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::pair<VertexId, Rat>> vweights;
  std::vector<std::tuple<VertexId, VertexId, Rat>> eweights;
  std::map<std::string, std::string> metadata;

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      if (!(ss >> n >> m)) fail("malformed header");
      have_header = true;
    } else if (tag == "c") {
      std::string rest;
      std::getline(ss, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      auto eq = rest.find('=');
      if (eq == std::string::npos) fail("malformed metadata line");
      metadata[rest.substr(0, eq)] = rest.substr(eq + 1);
    } else if (tag == "e") {
      VertexId a, b;
      if (!(ss >> a >> b)) fail("malformed edge line");
      edges.emplace_back(a, b);
    } else if (tag == "vw") {
      VertexId v;
      std::string w;
      if (!(ss >> v >> w)) fail("malformed vertex weight line");
      vweights.emplace_back(v, Rat::parse(w));
    } else if (tag == "ew") {
      VertexId a, b;
      std::string w;
      if (!(ss >> a >> b >> w)) fail("malformed edge weight line");
      eweights.emplace_back(a, b, Rat::parse(w));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw std::invalid_argument("read_graph: missing p header");
  if (edges.size() != m)
    throw std::invalid_argument("read_graph: header announces " +
                                std::to_string(m) + " edges, found " +
                                std::to_string(edges.size()));

  std::vector<VertexId> verts(n);
  for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<VertexId>(i);
  GraphFile gf;
  gf.graph = Graph(std::move(verts), edges);
  gf.metadata = std::move(metadata);
  for (const auto& [v, w] : vweights) gf.graph.set_vertex_weight(v, w);
  for (const auto& [a, b, w] : eweights) gf.graph.set_edge_weight(a, b, w);
  return gf;
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::map<std::string, std::string>& metadata) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_graph_file: cannot open " + path);
  write_graph(out, g, metadata);
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_graph_file: cannot open " + path);
  return read_graph(in);
}

}  // namespace localmds
