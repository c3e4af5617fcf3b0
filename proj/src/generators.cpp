#include "localmds/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace localmds {
namespace gen {

namespace {

std::vector<VertexId> iota_verts(std::size_t n) {
  std::vector<VertexId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<VertexId>(i);
  return v;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

int isqrt_ceil(int x) {  // smallest k with k*k >= x
  int k = 0;
  while (k * k < x) ++k;
  return k;
}

ClassInfo genus_class(int genus) {
  ClassInfo ci;
  ci.planar = genus == 0;
  ci.genus_upper = genus;
  // Paper constants: density of any depth-1 minor of a genus-g graph is at
  // most 3 when g = 0 and at most 5*sqrt(g) otherwise; K_{3,4g+3} is
  // excluded as a minor.
  ci.density_c = genus == 0 ? Rat(3) : Rat(isqrt_ceil(25 * genus));
  ci.arboricity_upper = Rat(3);
  ci.k3t_exclusion_t = 4 * genus + 3;
  return ci;
}

}  // namespace

std::map<std::string, std::string> ClassInfo::to_metadata() const {
  return {
      {"planar", planar ? "1" : "0"},
      {"genus_upper", std::to_string(genus_upper)},
      {"arboricity_upper", arboricity_upper.str()},
      {"density_c", density_c.str()},
      {"k3t_t", std::to_string(k3t_exclusion_t)},
  };
}

ClassInfo ClassInfo::from_metadata(const std::map<std::string, std::string>& md) {
  ClassInfo ci;
  if (auto it = md.find("planar"); it != md.end()) ci.planar = it->second == "1";
  if (auto it = md.find("genus_upper"); it != md.end())
    ci.genus_upper = std::stoi(it->second);
  if (auto it = md.find("arboricity_upper"); it != md.end())
    ci.arboricity_upper = Rat::parse(it->second);
  if (auto it = md.find("density_c"); it != md.end())
    ci.density_c = Rat::parse(it->second);
  if (auto it = md.find("k3t_t"); it != md.end())
    ci.k3t_exclusion_t = std::stoi(it->second);
  return ci;
}

Generated path(std::size_t n) {
  require(n >= 1, "path: n >= 1");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i + 1 < n; ++i)
    es.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(1);
  ci.density_c = Rat(1);
  ci.k3t_exclusion_t = 3;
  return {Graph(iota_verts(n), es), ci};
}

Generated cycle(std::size_t n) {
  require(n >= 3, "cycle: n >= 3");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < n; ++i)
    es.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(2);
  ci.density_c = Rat(1);
  ci.k3t_exclusion_t = 3;
  return {Graph(iota_verts(n), es), ci};
}

Generated star(std::size_t leaves) {
  require(leaves >= 1, "star: leaves >= 1");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 1; i <= leaves; ++i)
    es.emplace_back(0, static_cast<VertexId>(i));
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(1);
  ci.density_c = Rat(1);
  ci.k3t_exclusion_t = 3;
  return {Graph(iota_verts(leaves + 1), es), ci};
}

Generated random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random_tree: n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    es.emplace_back(static_cast<VertexId>(pick(rng)), static_cast<VertexId>(i));
  }
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(1);
  ci.density_c = Rat(1);
  ci.k3t_exclusion_t = 3;
  return {Graph(iota_verts(n), es), ci};
}

Generated grid(std::size_t w, std::size_t h) {
  require(w >= 1 && h >= 1, "grid: sides >= 1");
  auto id = [w](std::size_t x, std::size_t y) {
    return static_cast<VertexId>(y * w + x);
  };
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) es.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < h) es.emplace_back(id(x, y), id(x, y + 1));
    }
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(3);
  ci.density_c = Rat(3);
  ci.k3t_exclusion_t = 3;
  return {Graph(iota_verts(w * h), es), ci};
}

Generated torus_grid(std::size_t w, std::size_t h) {
  require(w >= 3 && h >= 3, "torus_grid: sides >= 3");
  auto id = [w](std::size_t x, std::size_t y) {
    return static_cast<VertexId>(y * w + x);
  };
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      es.emplace_back(id(x, y), id((x + 1) % w, y));
      es.emplace_back(id(x, y), id(x, (y + 1) % h));
    }
  return {Graph(iota_verts(w * h), es), genus_class(1)};
}

Generated complete_bipartite(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "complete_bipartite: sides >= 1");
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      es.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(m + j));
  int genus = 0;
  if (m >= 2 && n >= 2) {
    long p = static_cast<long>(m - 2) * static_cast<long>(n - 2);
    genus = static_cast<int>((p + 3) / 4);
  }
  ClassInfo ci = genus_class(genus);
  // Arboricity of K_{m,n} (Nash-Williams): ceil(mn / (m+n-1)).
  std::int64_t mn = static_cast<std::int64_t>(m) * static_cast<std::int64_t>(n);
  ci.arboricity_upper = Rat((mn + static_cast<std::int64_t>(m + n) - 2) /
                            (static_cast<std::int64_t>(m + n) - 1));
  return {Graph(iota_verts(m + n), es), ci};
}

Generated subdivided_clique(std::size_t n, std::size_t s) {
  require(n >= 2, "subdivided_clique: n >= 2");
  require(s >= 1, "subdivided_clique: s >= 1");
  std::vector<std::pair<VertexId, VertexId>> es;
  VertexId next = static_cast<VertexId>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VertexId prev = static_cast<VertexId>(i);
      for (std::size_t k = 0; k < s; ++k) {
        es.emplace_back(prev, next);
        prev = next++;
      }
      es.emplace_back(prev, static_cast<VertexId>(j));
    }
  std::size_t total = n + s * (n * (n - 1) / 2);
  // Genus of a subdivision equals the genus of K_n.
  int genus = n <= 4 ? 0
                     : static_cast<int>((static_cast<long>(n - 3) * static_cast<long>(n - 4) + 11) / 12);
  ClassInfo ci = genus_class(genus);
  ci.planar = n <= 4;
  ci.arboricity_upper = Rat(2);
  if (s >= 3) {
    // With >= 3 internal vertices per edge no two branch vertices share a
    // radius-1 star, so depth-1 minors stay below density 2 and K_{3,3}
    // is excluded outright.
    ci.density_c = Rat(2);
    ci.k3t_exclusion_t = 3;
  }
  return {Graph(iota_verts(total), es), ci};
}

Generated random_planar(std::size_t n, std::uint64_t seed, const Rat& sparsify) {
  require(n >= 3, "random_planar: n >= 3");
  require(sparsify >= Rat(0) && sparsify < Rat(1), "random_planar: sparsify in [0,1)");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> es{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (VertexId v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    std::size_t f = pick(rng);
    auto [a, b, c] = faces[f];
    es.emplace_back(a, v);
    es.emplace_back(b, v);
    es.emplace_back(c, v);
    faces[f] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  if (sparsify > Rat(0)) {
    std::size_t kill = static_cast<std::size_t>(
        (sparsify * Rat(static_cast<std::int64_t>(es.size()))).floor());
    for (std::size_t k = 0; k < kill; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
      es.erase(es.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    }
  }
  ClassInfo ci;
  ci.planar = true;
  ci.arboricity_upper = Rat(3);
  ci.density_c = Rat(3);
  ci.k3t_exclusion_t = 3;
  Graph g(iota_verts(n), es);
  // Planar by construction; keep the Euler bound as a runtime assertion.
  if (g.vertex_count() >= 3 &&
      g.edge_count() > 3 * g.vertex_count() - 6)
    throw std::logic_error("random_planar: Euler bound violated");
  return {std::move(g), ci};
}

void seed_edge_weights(Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(8, 24);  // weight = num/8 in [1,3]
  for (const Edge& e : g.edges())
    g.set_edge_weight(e.u, e.v, Rat(num(rng), 8));
}

void seed_vertex_weights(Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(8, 24);
  for (VertexId v : g.vertices()) g.set_vertex_weight(v, Rat(num(rng), 8));
}

}  // namespace gen
}  // namespace localmds
