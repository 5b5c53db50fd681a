#include "gnum/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gnum {

bool EdgeProfile::contains(int i, int j) const {
  return std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) !=
         pairs.end();
}

std::uint64_t HolderGraph::n() const {
  std::uint64_t prod = 1;
  for (const auto& v : vertices)
    for (unsigned i = 0; i < v.a; ++i) prod *= v.p;
  return prod;
}

bool HolderGraph::square_free() const {
  return std::all_of(vertices.begin(), vertices.end(),
                     [](const PrimePower& v) { return v.a == 1; });
}

int HolderGraph::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += e.from == v;
  return d;
}

int HolderGraph::in_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += e.to == v;
  return d;
}

bool HolderGraph::has_edge(int from, int to) const {
  return find_edge(from, to) != nullptr;
}

const GraphEdge* HolderGraph::find_edge(int from, int to) const {
  for (const auto& e : edges)
    if (e.from == from && e.to == to) return &e;
  return nullptr;
}

HolderGraph build_graph(const Factorization& f) {
  HolderGraph g;
  g.vertices = f.entries;
  const int n = static_cast<int>(g.vertices.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& [p, alpha] = g.vertices[x];
      const auto& [q, beta] = g.vertices[y];
      EdgeProfile profile;
      std::uint64_t pi = 1;
      for (unsigned i = 1; i <= alpha; ++i) {
        pi *= p;
        for (unsigned j = 1; j <= beta; ++j) {
          if (pow_mod(q, j, pi) == 1)
            profile.pairs.emplace_back(static_cast<int>(i),
                                       static_cast<int>(j));
        }
      }
      if (!profile.pairs.empty()) {
        std::sort(profile.pairs.begin(), profile.pairs.end());
        g.edges.push_back({x, y, std::move(profile)});
      }
    }
  }
  return g;
}

Strength edge_strength(const HolderGraph& g, const GraphEdge& e) {
  const auto& from = g.vertices[e.from];
  const auto& to = g.vertices[e.to];
  if (from.a == 2 && to.a == 1) {
    // p^2 -> q: strong means p^2 | q - 1.
    return e.profile.contains(2, 1) ? Strength::strong : Strength::weak;
  }
  if (from.a == 1 && to.a == 2) {
    // q -> p^2: strong means q | p - 1; weak means q | p + 1 only.
    return e.profile.contains(1, 1) ? Strength::strong : Strength::weak;
  }
  throw std::invalid_argument(
      "edge_strength: edge is not between a square and a first power");
}

Decomposition decompose(const HolderGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);

  Decomposition d;
  std::vector<std::vector<int>> groups(n);
  for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    if (group.size() == 1) {
      d.isolated.push_back(g.vertices[group[0]]);
      continue;
    }
    HolderGraph comp;
    std::vector<int> index(n, -1);
    for (int v : group) {
      index[v] = static_cast<int>(comp.vertices.size());
      comp.vertices.push_back(g.vertices[v]);
    }
    for (const auto& e : g.edges) {
      if (index[e.from] >= 0 && index[e.to] >= 0)
        comp.edges.push_back({index[e.from], index[e.to], e.profile});
    }
    d.components.push_back(std::move(comp));
  }
  return d;
}

std::uint64_t Decomposition::cyclic_part() const {
  std::uint64_t m = 1;
  for (const auto& v : isolated)
    for (unsigned i = 0; i < v.a; ++i) m *= v.p;
  return m;
}

std::vector<std::uint32_t> central_subsets(const HolderGraph& g) {
  if (!g.square_free())
    throw std::invalid_argument("central_subsets: graph must be square-free");
  const int n = static_cast<int>(g.vertices.size());
  if (n > 24) throw std::invalid_argument("central_subsets: more than 24 vertices");
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const auto& e : g.edges) out_mask[e.from] |= 1u << e.to;
  std::vector<std::uint32_t> result;
  for (std::uint32_t pi = 0; pi < (1u << n); ++pi) {
    bool central = true;
    for (int v = 0; v < n && central; ++v) {
      if (!(pi & (1u << v)) && (out_mask[v] & pi) == 0) central = false;
    }
    if (central) result.push_back(pi);
  }
  return result;
}

std::vector<int> initial_vertices(const HolderGraph& g) {
  std::vector<int> result;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (g.out_degree(v) == 0) result.push_back(v);
  return result;
}

std::vector<int> terminal_vertices(const HolderGraph& g) {
  std::vector<int> result;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
    if (g.in_degree(v) == 0) result.push_back(v);
  return result;
}

std::string vertex_name(const PrimePower& v) {
  std::string name = std::to_string(v.p);
  if (v.a > 1) name += "^" + std::to_string(v.a);
  return name;
}

namespace {

// Weak/strong applies only to cube-free edges touching a square vertex.
const char* strength_tag(const HolderGraph& g, const GraphEdge& e) {
  const auto& from = g.vertices[e.from];
  const auto& to = g.vertices[e.to];
  if ((from.a == 2 && to.a == 1) || (from.a == 1 && to.a == 2))
    return edge_strength(g, e) == Strength::weak ? "weak" : "strong";
  return "n/a";
}

}  // namespace

std::string to_dot(const HolderGraph& g) {
  std::string dot = "digraph holder {\n";
  for (const auto& v : g.vertices)
    dot += "  \"" + vertex_name(v) + "\";\n";
  for (const auto& e : g.edges) {
    dot += "  \"" + vertex_name(g.vertices[e.from]) + "\" -> \"" +
           vertex_name(g.vertices[e.to]) + "\"";
    if (std::string(strength_tag(g, e)) == "weak") dot += " [style=dashed]";
    dot += ";\n";
  }
  dot += "}\n";
  return dot;
}

std::string to_json(const HolderGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"p", v.p}, {"a", v.a}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json je;
    je["from"] = vertex_name(g.vertices[e.from]);
    je["to"] = vertex_name(g.vertices[e.to]);
    je["strength"] = strength_tag(g, e);
    je["pairs"] = nlohmann::ordered_json::array();
    for (const auto& [i, k] : e.profile.pairs) je["pairs"].push_back({i, k});
    j["edges"].push_back(je);
  }
  return j.dump();
}

}  // namespace gnum
