#include "gnum/holder.hpp"

#include <algorithm>
#include <bit>

namespace gnum {

int AbstractGraph::out_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += e.first == v;
  return d;
}

int AbstractGraph::in_degree(int v) const {
  int d = 0;
  for (const auto& e : edges) d += e.second == v;
  return d;
}

bool AbstractGraph::has_edge(int from, int to) const {
  return std::find(edges.begin(), edges.end(), std::make_pair(from, to)) !=
         edges.end();
}

bool AbstractGraph::is_dag() const {
  const int n = size();
  std::vector<int> indeg(n, 0);
  for (const auto& e : edges) ++indeg[e.second];
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (const auto& e : edges)
      if (e.first == v && --indeg[e.second] == 0) queue.push_back(e.second);
  }
  return seen == n;
}

AbstractGraph AbstractGraph::without_vertex(int v) const {
  AbstractGraph g;
  std::vector<int> index(size(), -1);
  for (int u = 0; u < size(); ++u) {
    if (u == v) continue;
    index[u] = g.size();
    g.labels.push_back(labels[u]);
  }
  for (const auto& e : edges)
    if (e.first != v && e.second != v)
      g.edges.emplace_back(index[e.first], index[e.second]);
  return g;
}

AbstractGraph to_abstract(const HolderGraph& g) {
  if (!g.square_free())
    throw std::invalid_argument("to_abstract: graph must be square-free");
  AbstractGraph a;
  for (const auto& v : g.vertices) a.labels.emplace_back(v.p);
  for (const auto& e : g.edges) a.edges.emplace_back(e.from, e.to);
  return a;
}

namespace {

std::uint64_t subset_sum(const AbstractGraph& g, int root) {
  const int n = g.size();
  if (n > 24) throw SizeError("g_holder: more than 24 vertices");
  for (int v = 0; v < n; ++v) {
    if (g.out_degree(v) >= 2 && !g.labels[v])
      throw MissingLabelError(
          "g_holder: unlabeled vertex with out-degree >= 2");
  }
  std::vector<std::uint32_t> out_mask(n, 0);
  for (const auto& e : g.edges) out_mask[e.first] |= 1u << e.second;

  std::uint64_t total = 0;
  const std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
  for (std::uint32_t pi = 0;; ++pi) {
    if (root < 0 || (pi & (1u << root))) {
      std::uint64_t term = 1;
      for (int v = 0; v < n && term != 0; ++v) {
        if (pi & (1u << v)) continue;
        int mult = std::popcount(out_mask[v] & pi);
        if (mult == 0) {
          term = 0;
        } else if (mult > 1) {
          // (p^mult - 1) / (p - 1); a mult of 1 contributes a factor of 1
          // independently of the label.
          std::uint64_t p = *g.labels[v], h = 0, pk = 1;
          for (int i = 0; i < mult; ++i) {
            h += pk;
            pk *= p;
          }
          term *= h;
        }
      }
      total += term;
    }
    if (pi == all) break;
  }
  return total;
}

}  // namespace

std::uint64_t g_holder(const AbstractGraph& g) { return subset_sum(g, -1); }

std::uint64_t g_holder(const HolderGraph& g) {
  return subset_sum(to_abstract(g), -1);
}

std::uint64_t g_rooted(const AbstractGraph& g, int v) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument("g_rooted: vertex out of range");
  return subset_sum(g, v);
}

AbstractGraph splice(const AbstractGraph& gamma, int sink_of_gamma,
                     const AbstractGraph& lambda, int p_tilde) {
  if (sink_of_gamma < 0 || sink_of_gamma >= gamma.size() ||
      p_tilde < 0 || p_tilde >= lambda.size())
    throw std::invalid_argument("splice: vertex out of range");
  if (gamma.out_degree(sink_of_gamma) != 0)
    throw std::invalid_argument("splice: chosen vertex of gamma is not a sink");
  AbstractGraph g = gamma;
  const int offset = gamma.size();
  g.labels.insert(g.labels.end(), lambda.labels.begin(), lambda.labels.end());
  for (const auto& e : lambda.edges)
    g.edges.emplace_back(e.first + offset, e.second + offset);
  g.edges.emplace_back(sink_of_gamma, p_tilde + offset);
  return g;
}

AbstractGraph extend_forward(const AbstractGraph& g, int sink) {
  if (sink < 0 || sink >= g.size() || g.out_degree(sink) != 0)
    throw std::invalid_argument("extend_forward: vertex is not a sink");
  AbstractGraph r = g;
  r.labels.emplace_back(std::nullopt);
  r.edges.emplace_back(sink, r.size() - 1);
  return r;
}

AbstractGraph extend_backward(const AbstractGraph& g, int source) {
  if (source < 0 || source >= g.size() || g.in_degree(source) != 0)
    throw std::invalid_argument("extend_backward: vertex is not a source");
  AbstractGraph r = g;
  r.labels.emplace_back(std::nullopt);
  r.edges.emplace_back(r.size() - 1, source);
  return r;
}

std::uint64_t path_count(unsigned k) {
  // g(Phi_k) = F_{k+1}; the empty path has g = 1.
  std::uint64_t a = 1, b = 1;  // F_1, F_2
  for (unsigned i = 1; i <= k; ++i) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t lower_bound_degree(std::uint64_t p, unsigned r, unsigned s) {
  std::uint64_t geom = 0, pk = 1;
  for (unsigned i = 0; i < s; ++i) {
    geom += pk;
    pk *= p;
  }
  return (1ull << r) + geom;
}

std::uint64_t lower_bound_connected(const Factorization& f) {
  std::uint64_t prod = 1;
  for (const auto& [p, a] : f.entries) {
    switch (a) {
      case 1: break;
      case 2: prod *= 2; break;
      case 3: prod *= 5; break;
      default:
        throw std::invalid_argument(
            "lower_bound_connected: exponent >= 4 has no table entry");
    }
  }
  return prod + f.entries.size() - 1;
}

AbstractGraph make_path(unsigned k) {
  AbstractGraph g;
  g.labels.resize(k);
  for (unsigned i = 0; i + 1 < k; ++i)
    g.edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return g;
}

}  // namespace gnum
