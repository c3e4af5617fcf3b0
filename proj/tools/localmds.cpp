// Command-line front door: generate graphs, run the dominating-set
// algorithms directly or on the round engine, verify sets against the
// oracle, cluster, evaluate first-order formulas, and sweep experiments
// into CSV.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "localmds/clustering.hpp"
#include "localmds/errors.hpp"
#include "localmds/fo.hpp"
#include "localmds/generators.hpp"
#include "localmds/graph_io.hpp"
#include "localmds/mds.hpp"
#include "localmds/mds_programs.hpp"
#include "localmds/oracle.hpp"
#include "localmds/ptas.hpp"

using namespace localmds;

namespace {

struct FamilySpec {
  std::string name;
  std::size_t n = 0, w = 0, h = 0, m = 0;
  std::uint64_t seed = 0;
  Rat sparsify = Rat(0);
};

gen::Generated make_family(const FamilySpec& f) {
  if (f.name == "path") return gen::path(f.n);
  if (f.name == "cycle") return gen::cycle(f.n);
  if (f.name == "star") return gen::star(f.n);
  if (f.name == "tree") return gen::random_tree(f.n, f.seed);
  if (f.name == "grid") return gen::grid(f.w ? f.w : f.n, f.h ? f.h : f.n);
  if (f.name == "torus")
    return gen::torus_grid(f.w ? f.w : f.n, f.h ? f.h : f.n);
  if (f.name == "kbip") return gen::complete_bipartite(f.m ? f.m : 3, f.n);
  if (f.name == "subdiv-clique") return gen::subdivided_clique(f.n, 3);
  if (f.name == "random-planar") return gen::random_planar(f.n, f.seed, f.sparsify);
  throw CLI::ValidationError("unknown family '" + f.name + "'");
}

clustering::ExpansionBound parse_preset(const std::string& preset) {
  if (preset == "planar") return clustering::expansion_planar();
  if (preset.rfind("genus:", 0) == 0)
    return clustering::expansion_genus(std::stoi(preset.substr(6)));
  if (preset.rfind("const:", 0) == 0)
    return clustering::expansion_const(Rat::parse(preset.substr(6)));
  throw CLI::ValidationError("preset must be planar, genus:<g> or const:<p/q>");
}

Graph load_graph(const std::string& path, gen::ClassInfo* info = nullptr) {
  GraphFile gf = read_graph_file(path);
  if (info) *info = gen::ClassInfo::from_metadata(gf.metadata);
  return std::move(gf.graph);
}

VertexSet load_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open set file " + path);
  VertexSet s;
  VertexId v;
  while (in >> v) s.insert(v);
  return s;
}

std::string gamma_or_na(const Graph& g, std::size_t* out_gamma) {
  if (g.vertex_count() > oracle::default_cap()) return "NA";
  std::size_t gamma = oracle::gamma(g);
  if (out_gamma) *out_gamma = gamma;
  return std::to_string(gamma);
}

void print_mds_summary(const Graph& g, const mds::MdsResult& r,
                       const std::string& algo, bool simulated) {
  bool dom = oracle::is_dominating(g, r.dominating_set);
  std::cout << "algorithm=" << algo << " n=" << g.vertex_count()
            << " m=" << g.edge_count() << " |D|=" << r.phase1_set.size()
            << " |pre|=" << r.preprocessing_set.size()
            << " |D'|=" << r.phase2_set.size()
            << " |DS|=" << r.dominating_set.size();
  if (simulated) std::cout << " rounds=" << r.rounds_used;
  std::cout << " dominating=" << (dom ? "true" : "false");
  std::size_t gamma = 0;
  std::string gs = gamma_or_na(g, &gamma);
  std::cout << " gamma=" << gs;
  if (gs != "NA" && dom)
    std::cout << " ratio="
              << Rat(static_cast<std::int64_t>(r.dominating_set.size()),
                     static_cast<std::int64_t>(gamma))
                     .str();
  else
    std::cout << " ratio=NA";
  std::cout << "\n";
  if (!dom) throw std::runtime_error("output does not dominate the graph");
}

int cmd_generate(const FamilySpec& fam, std::uint64_t weight_seed,
                 const std::string& out) {
  gen::Generated g = make_family(fam);
  if (weight_seed) {
    gen::seed_edge_weights(g.graph, weight_seed);
    gen::seed_vertex_weights(g.graph, weight_seed + 1);
  }
  write_graph_file(out, g.graph, g.info.to_metadata());
  std::cout << "wrote " << out << ": n=" << g.graph.vertex_count()
            << " m=" << g.graph.edge_count() << "\n";
  return 0;
}

int cmd_run(const std::string& algo, const std::string& graph_path,
            const Rat& c, int genus, const Rat& epsilon,
            const std::string& preset, const Rat& nabla1,
            const std::string& mode, bool chain_refine) {
  gen::ClassInfo info;
  Graph g = load_graph(graph_path, &info);
  const bool simulated = mode == "simulated";

  mds::MdsResult r;
  if (algo == "lenzen") {
    r = simulated ? mds::simulate_modified_lenzen(g, c)
                  : mds::modified_lenzen(g, c);
    print_mds_summary(g, r, algo, simulated);
  } else if (algo == "genus") {
    r = simulated ? mds::simulate_genus(g, genus) : mds::genus_algorithm(g, genus);
    print_mds_summary(g, r, algo, simulated);
  } else if (algo == "greedy-baseline") {
    r.dominating_set = oracle::greedy_mds(g);
    r.phase2_set = r.dominating_set;
    print_mds_summary(g, r, algo, false);
  } else if (algo == "ptas") {
    mds::MdsResult seed = mds::modified_lenzen(g, c);
    VertexSet refined = ptas::refine(g, seed.dominating_set, epsilon, c,
                                     nabla1, parse_preset(preset));
    mds::MdsResult rr;
    rr.dominating_set = refined;
    rr.phase2_set = refined;
    print_mds_summary(g, rr, algo, false);
    return 0;
  } else {
    throw CLI::ValidationError("algorithm must be lenzen, genus, ptas or greedy-baseline");
  }

  if (chain_refine && (algo == "lenzen" || algo == "genus")) {
    VertexSet refined = ptas::refine(g, r.dominating_set, epsilon, c, nabla1,
                                     parse_preset(preset));
    mds::MdsResult rr;
    rr.dominating_set = refined;
    rr.phase2_set = refined;
    print_mds_summary(g, rr, algo + "+refine", false);
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& set_path) {
  Graph g = load_graph(graph_path);
  VertexSet s = load_set(set_path);
  bool dom = oracle::is_dominating(g, s);
  std::cout << "dominating=" << (dom ? "true" : "false");
  if (dom && g.vertex_count() <= oracle::default_cap())
    std::cout << " ratio=" << oracle::ratio(g, s).str();
  else
    std::cout << " ratio=NA";
  std::cout << "\n";
  return dom ? 0 : 1;
}

int cmd_cluster(const std::string& graph_path, const Rat& epsilon,
                const std::string& preset) {
  Graph g = load_graph(graph_path);
  ClusterPartition cp = clustering::cluster(g, epsilon, parse_preset(preset));

  std::map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < cp.clusters.size(); ++i)
    for (VertexId v : cp.clusters[i]) owner[v] = i;
  Rat crossing(0);
  for (const Edge& e : g.edges())
    if (owner.at(e.u) != owner.at(e.v)) crossing += g.edge_weight(e.u, e.v);
  bool weight_ok = crossing <= epsilon * g.total_edge_weight();
  bool cover_ok = owner.size() == g.vertex_count();

  std::cout << "clusters=" << cp.clusters.size()
            << " radius_bound=" << cp.radius_bound
            << " crossing_weight=" << crossing.str()
            << " total_weight=" << g.total_edge_weight().str()
            << " weight_ok=" << (weight_ok ? "true" : "false")
            << " cover_ok=" << (cover_ok ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < cp.clusters.size(); ++i) {
    std::cout << "cluster " << i << ":";
    for (VertexId v : cp.clusters[i]) std::cout << " " << v;
    std::cout << "\n";
  }
  return weight_ok && cover_ok ? 0 : 1;
}

int cmd_eval_fo(const std::string& graph_path, const std::string& builtin,
                const std::string& formula_path, int c, int t) {
  Graph g = load_graph(graph_path);
  fo::FormulaPtr phi;
  if (!formula_path.empty()) {
    std::ifstream in(formula_path);
    if (!in) throw std::runtime_error("cannot open formula file " + formula_path);
    std::stringstream buf;
    buf << in.rdbuf();
    phi = fo::parse_sexpr(buf.str());
  } else if (builtin == "phiD") {
    phi = fo::build_phi_D(c);
  } else if (builtin == "psiD") {
    phi = fo::build_psi_Dprime(c, t);
  } else {
    throw CLI::ValidationError("--builtin must be phiD or psiD, or use --formula");
  }
  VertexSet s = fo::defined_set(g, phi);
  std::cout << "size=" << s.size() << " set=";
  bool first = true;
  for (VertexId v : s) {
    if (!first) std::cout << " ";
    std::cout << v;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

int cmd_sweep(const std::string& family, const std::string& range,
              const std::string& algo, const Rat& c, int genus,
              const Rat& epsilon, const std::string& preset, const Rat& nabla1,
              std::uint64_t seed, const std::string& mode,
              const std::string& csv_path) {
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("size range must look like 4..10");
  std::size_t lo = std::stoul(range.substr(0, dots));
  std::size_t hi = std::stoul(range.substr(dots + 2));
  if (lo > hi) throw CLI::ValidationError("empty size range");

  std::vector<std::string> rows(hi - lo + 1);
  std::string params = "c=" + c.str() + ";genus=" + std::to_string(genus) +
                       ";eps=" + epsilon.str() + ";seed=" + std::to_string(seed);

  for_each_index(rows.size(), Exec::Parallel, [&](std::size_t idx) {
    std::size_t size = lo + idx;
    FamilySpec fam;
    fam.name = family;
    fam.n = size;
    fam.w = size;
    fam.h = size;
    fam.seed = seed + idx;
    Graph g = make_family(fam).graph;

    auto t0 = std::chrono::steady_clock::now();
    VertexSet out;
    int rounds = 0;
    if (algo == "lenzen") {
      auto r = mode == "simulated"
                   ? mds::simulate_modified_lenzen(g, c, Exec::Serial)
                   : mds::modified_lenzen(g, c, Exec::Serial);
      out = r.dominating_set;
      rounds = r.rounds_used;
    } else if (algo == "genus") {
      auto r = mode == "simulated"
                   ? mds::simulate_genus(g, genus, 60, Exec::Serial)
                   : mds::genus_algorithm(g, genus, 60, Exec::Serial);
      out = r.dominating_set;
      rounds = r.rounds_used;
    } else if (algo == "ptas") {
      auto seed_set = mds::modified_lenzen(g, c, Exec::Serial).dominating_set;
      ptas::RefineOptions opts;
      opts.exec = Exec::Serial;
      out = ptas::refine(g, seed_set, epsilon, c, nabla1, parse_preset(preset),
                         opts);
    } else if (algo == "greedy-baseline") {
      out = oracle::greedy_mds(g);
    } else {
      throw std::runtime_error("unknown sweep algorithm " + algo);
    }
    auto wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

    std::string gamma = "NA", ratio = "NA";
    if (g.vertex_count() <= oracle::default_cap()) {
      std::size_t gv = oracle::gamma(g);
      gamma = std::to_string(gv);
      ratio = Rat(static_cast<std::int64_t>(out.size()),
                  static_cast<std::int64_t>(gv))
                  .str();
    }
    std::ostringstream row;
    row << g.vertex_count() << "," << g.edge_count() << "," << family << ","
        << algo << "," << params << "," << out.size() << "," << gamma << ","
        << ratio << "," << rounds << "," << static_cast<long>(wall_ms + 0.5);
    rows[idx] = row.str();
  });

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw std::runtime_error("cannot open csv " + csv_path);
    os = &file;
  }
  *os << "n,m,family,algorithm,params,output_size,gamma,ratio,rounds,wall_ms\n";
  for (const std::string& row : rows) *os << row << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCAL-model dominating set toolkit"};
  app.require_subcommand(1);

  FamilySpec fam;
  std::string out_path;
  std::uint64_t weight_seed = 0;
  std::string sparsify_str = "0";
  auto* cgen = app.add_subcommand("generate", "write a generated graph");
  cgen->add_option("--family", fam.name,
                   "path|cycle|star|tree|grid|torus|kbip|subdiv-clique|random-planar")
      ->required();
  cgen->add_option("--n", fam.n, "size parameter");
  cgen->add_option("--w", fam.w, "grid/torus width");
  cgen->add_option("--h", fam.h, "grid/torus height");
  cgen->add_option("--m", fam.m, "kbip left side size (default 3)");
  cgen->add_option("--seed", fam.seed, "generator seed");
  cgen->add_option("--sparsify", sparsify_str,
                   "random-planar edge deletion fraction p/q");
  cgen->add_option("--weight-seed", weight_seed,
                   "seed for rational vertex/edge weights (0 = unweighted)");
  cgen->add_option("--out", out_path, "output path")->required();

  std::string algo, graph_path, mode = "direct", preset = "planar";
  std::string c_str = "3", eps_str = "1/2", nabla1_str = "3";
  int genus = 0, fo_c = 3, fo_t = 3;
  bool chain_refine = false;
  auto* crun = app.add_subcommand("run", "run an algorithm on a graph file");
  crun->add_option("algorithm", algo, "lenzen|genus|ptas|greedy-baseline")
      ->required();
  crun->add_option("graph", graph_path, "graph file")->required();
  crun->add_option("--c", c_str, "depth-1 minor density bound p/q");
  crun->add_option("--genus", genus, "genus bound for the genus algorithm");
  crun->add_option("--epsilon", eps_str, "refinement epsilon p/q");
  crun->add_option("--preset", preset,
                   "expansion preset planar|genus:<g>|const:<p/q>");
  crun->add_option("--nabla1", nabla1_str, "depth-1 minor density bound for refine");
  crun->add_option("--mode", mode, "direct|simulated")
      ->check(CLI::IsMember({"direct", "simulated"}));
  crun->add_flag("--refine", chain_refine, "chain the output into refine");

  std::string set_path;
  auto* cver = app.add_subcommand("verify", "check a dominating set file");
  cver->add_option("graph", graph_path, "graph file")->required();
  cver->add_option("set", set_path, "vertex id list file")->required();

  auto* cclu = app.add_subcommand("cluster", "run the clustering pipeline");
  cclu->add_option("graph", graph_path, "graph file")->required();
  cclu->add_option("--epsilon", eps_str, "crossing weight budget p/q")->required();
  cclu->add_option("--preset", preset, "planar|genus:<g>|const:<p/q>");

  std::string builtin, formula_path;
  auto* cfo = app.add_subcommand("eval-fo", "evaluate a first-order formula");
  cfo->add_option("graph", graph_path, "graph file")->required();
  cfo->add_option("--builtin", builtin, "phiD|psiD");
  cfo->add_option("--formula", formula_path, "s-expression formula file");
  cfo->add_option("--c", fo_c, "cover budget parameter");
  cfo->add_option("--t", fo_t, "excluded K_{3,t} parameter");

  std::string family, range, csv_path;
  std::uint64_t sweep_seed = 1;
  auto* cswp = app.add_subcommand("sweep", "batch experiments to CSV");
  cswp->add_option("family", family, "generator family")->required();
  cswp->add_option("range", range, "size range, e.g. 4..10")->required();
  cswp->add_option("algorithm", algo, "lenzen|genus|ptas|greedy-baseline")
      ->required();
  cswp->add_option("--c", c_str, "density bound p/q");
  cswp->add_option("--genus", genus, "genus parameter");
  cswp->add_option("--epsilon", eps_str, "refine epsilon");
  cswp->add_option("--preset", preset, "expansion preset");
  cswp->add_option("--nabla1", nabla1_str, "nabla_1 bound");
  cswp->add_option("--seed", sweep_seed, "base seed");
  cswp->add_option("--mode", mode, "direct|simulated");
  cswp->add_option("--csv", csv_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    fam.sparsify = Rat::parse(sparsify_str);
    Rat c = Rat::parse(c_str), eps = Rat::parse(eps_str),
        nabla1 = Rat::parse(nabla1_str);
    if (cgen->parsed()) return cmd_generate(fam, weight_seed, out_path);
    if (crun->parsed())
      return cmd_run(algo, graph_path, c, genus, eps, preset, nabla1, mode,
                     chain_refine);
    if (cver->parsed()) return cmd_verify(graph_path, set_path);
    if (cclu->parsed()) return cmd_cluster(graph_path, eps, preset);
    if (cfo->parsed())
      return cmd_eval_fo(graph_path, builtin, formula_path, fo_c, fo_t);
    if (cswp->parsed())
      return cmd_sweep(family, range, algo, c, genus, eps, preset, nabla1,
                       sweep_seed, mode, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
