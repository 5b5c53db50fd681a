#include "gnum/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gnum/arith.hpp"
#include "gnum/graph.hpp"

namespace gnum {

namespace {

using Mask = std::uint64_t;  // adjacency matrix of <= 6 vertices, row-major

Mask edge_bit(int n, int from, int to) {
  return Mask{1} << (from * n + to);
}

Mask canonical_mask(int n, Mask adjacency) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mask best = ~Mask{0};
  do {
    Mask m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (adjacency & edge_bit(n, i, j)) m |= edge_bit(n, perm[i], perm[j]);
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool weakly_connected(int n, Mask adjacency) {
  std::vector<int> stack{0};
  Mask seen = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (seen & (Mask{1} << u)) continue;
      if ((adjacency & edge_bit(n, v, u)) || (adjacency & edge_bit(n, u, v))) {
        seen |= Mask{1} << u;
        stack.push_back(u);
      }
    }
  }
  return seen == (Mask{1} << n) - 1;
}

AbstractGraph from_mask(int n, Mask adjacency) {
  AbstractGraph g;
  g.labels.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adjacency & edge_bit(n, i, j)) g.edges.emplace_back(i, j);
  return g;
}

/// Exact labeled-where-needed isomorphism between a concrete graph and an
/// abstract pattern of the same size.
bool matches_pattern(const HolderGraph& g, const AbstractGraph& pattern) {
  const int n = pattern.size();
  if (static_cast<int>(g.vertices.size()) != n ||
      g.edges.size() != pattern.edges.size())
    return false;
  bool adj[6][6] = {};
  for (const auto& e : g.edges) adj[e.from][e.to] = true;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (pattern.labels[v] && g.vertices[perm[v]].p != *pattern.labels[v])
        ok = false;
    for (const auto& e : pattern.edges)
      if (!ok || !adj[perm[e.first]][perm[e.second]]) ok = false;
    if (ok) return true;  // edge counts agree, so the map is exact
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::vector<AbstractGraph> enumerate_graphs(int max_v, int max_in,
                                            int max_out) {
  if (max_v < 2 || max_v > 6 || max_in > 2 || max_out > 2)
    throw std::invalid_argument("enumerate_graphs: bounds out of range");

  std::vector<AbstractGraph> out;
  for (int n = 2; n <= max_v; ++n) {
    std::vector<std::pair<int, int>> slots;  // i < j keeps every graph acyclic
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);

    std::set<Mask> seen;
    for (std::uint32_t pick = 0; pick < (1u << slots.size()); ++pick) {
      Mask adjacency = 0;
      std::array<int, 6> ind{}, outd{};
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (pick & (1u << s)) {
          adjacency |= edge_bit(n, slots[s].first, slots[s].second);
          ++outd[slots[s].first];
          ++ind[slots[s].second];
        }
      }
      bool ok = true;
      for (int v = 0; v < n; ++v)
        if (ind[v] > max_in || outd[v] > max_out) ok = false;
      if (!ok || !weakly_connected(n, adjacency)) continue;
      seen.insert(canonical_mask(n, adjacency));
    }
    for (Mask m : seen) out.push_back(from_mask(n, m));
  }
  return out;
}

std::optional<std::uint64_t> realize(const AbstractGraph& pattern,
                                     std::uint64_t bound) {
  const std::size_t sz = pattern.labels.size();
  for (std::uint64_t n = 2; n <= bound; ++n) {
    const Factorization f = factorize(n);
    if (f.entries.size() != sz) continue;
    bool square_free = true;
    for (const auto& [p, a] : f.entries)
      if (a != 1) square_free = false;
    if (!square_free) continue;
    const HolderGraph g = build_graph(f);
    if (matches_pattern(g, pattern)) return n;
  }
  return std::nullopt;
}

CensusReport admissible_squarefree(int target) {
  if (target != 6 && target != 7)
    throw std::invalid_argument("admissible_squarefree: target must be 6 or 7");
  const std::uint64_t realize_bound = 100000;
  CensusReport report{{5, 2, 2, target}, {}};

  for (const AbstractGraph& shape : enumerate_graphs(5, 2, 2)) {
    std::vector<int> apexes;
    for (int v = 0; v < shape.size(); ++v)
      if (shape.out_degree(v) >= 2) apexes.push_back(v);

    if (apexes.empty()) {
      if (g_holder(shape) != static_cast<std::uint64_t>(target)) continue;
      if (auto n = realize(shape, realize_bound))
        report.entries.push_back(
            {shape, std::nullopt, static_cast<std::uint64_t>(target), *n});
      continue;
    }
    if (apexes.size() >= 2) continue;  // each apex adds >= 4: g >= 9 > 7

    std::uint64_t previous = 0;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      AbstractGraph labeled = shape;
      labeled.labels[apexes[0]] = p;
      const std::uint64_t value = g_holder(labeled);
      if (p >= 3) {
        // The sweep cap at 13 relies on g growing with the odd label.
        if (value < previous)
          throw std::logic_error("admissible_squarefree: sweep not monotone");
        previous = value;
      }
      if (value != static_cast<std::uint64_t>(target)) continue;
      if (auto n = realize(labeled, realize_bound))
        report.entries.push_back({labeled, p, value, *n});
    }
  }
  return report;
}

std::string to_json(const CensusReport& report) {
  nlohmann::ordered_json j;
  j["params"] = {{"max_vertices", report.params.max_vertices},
                 {"max_in", report.params.max_in},
                 {"max_out", report.params.max_out},
                 {"target", report.params.target}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["graph"]["vertices"] = e.graph.size();
    auto& edges = entry["graph"]["edges"] = nlohmann::ordered_json::array();
    for (const auto& [from, to] : e.graph.edges)
      edges.push_back({from, to});
    if (e.label)
      entry["labels"] = {{"p", *e.label}};
    else
      entry["labels"] = nullptr;
    entry["g"] = e.g;
    entry["n"] = e.realization;
    j["entries"].push_back(std::move(entry));
  }
  return j.dump(2);
}

}  // namespace gnum
