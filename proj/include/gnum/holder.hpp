#pragma once

// Square-free group counting via the subset-sum formula
//   g = sum over subsets pi of prod_{p not in pi} (p^{v(p,pi)} - 1)/(p - 1),
// where v(p, pi) counts out-neighbours of p inside pi, plus the splicing
// calculus built on top of it.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gnum/graph.hpp"

namespace gnum {

/// An unlabeled vertex was required to carry a prime label.
struct MissingLabelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Graph too large for exhaustive subset evaluation.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A DAG whose vertices carry a prime label only where the count depends on
/// it: evaluation requires a label exactly on vertices of out-degree >= 2.
struct AbstractGraph {
  std::vector<std::optional<std::uint64_t>> labels;
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(labels.size()); }
  int out_degree(int v) const;
  int in_degree(int v) const;
  bool has_edge(int from, int to) const;
  bool is_dag() const;

  /// Drop one vertex and its incident edges.
  AbstractGraph without_vertex(int v) const;
};

/// View a square-free HolderGraph as a fully labeled AbstractGraph.
AbstractGraph to_abstract(const HolderGraph& g);

/// Exact subset sum. Throws MissingLabelError / SizeError (> 24 vertices).
std::uint64_t g_holder(const AbstractGraph& g);
std::uint64_t g_holder(const HolderGraph& g);

/// Subset sum restricted to subsets containing v.
std::uint64_t g_rooted(const AbstractGraph& g, int v);

/// Join disjoint graphs with one new arrow sink_of_gamma -> p_tilde, where
/// sink_of_gamma has out-degree 0 in gamma. The count of the result equals
///   g(gamma) * g(lambda) + g(gamma - sink) * g_rooted(lambda, p_tilde).
/// Vertices of lambda are appended after gamma's.
AbstractGraph splice(const AbstractGraph& gamma, int sink_of_gamma,
                     const AbstractGraph& lambda, int p_tilde);

/// Append a new vertex behind a sink: g grows by g(graph - sink).
AbstractGraph extend_forward(const AbstractGraph& g, int sink);
/// Prepend a new vertex before a source: g grows by g_rooted(graph, source).
AbstractGraph extend_backward(const AbstractGraph& g, int source);

/// g of the directed path on k vertices = F_{k+1} with F_1 = F_2 = 1.
std::uint64_t path_count(unsigned k);

/// 2^r + (p^s - 1)/(p - 1): lower bound from one vertex of in-degree r,
/// out-degree s and label p.
std::uint64_t lower_bound_degree(std::uint64_t p, unsigned r, unsigned s);

/// Non-nilpotent bound for connected n: prod g(p_i^{a_i}) + s - 1.
/// Requires every exponent <= 3.
std::uint64_t lower_bound_connected(const Factorization& f);

/// Directed path on k vertices, unlabeled.
AbstractGraph make_path(unsigned k);

}  // namespace gnum
