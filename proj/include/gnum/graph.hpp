#pragma once

// Generalized Hoelder graphs: vertices are the maximal prime powers of n,
// with an edge p^a -> q^b whenever q^j == 1 (mod p^i) for some i <= a, j <= b.
// Graphs are immutable values after construction.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gnum/arith.hpp"

namespace gnum {

/// The set of (i, j) pairs witnessing an edge p^a -> q^b, sorted.
/// Downward closed in i for fixed j.
struct EdgeProfile {
  std::vector<std::pair<int, int>> pairs;

  bool contains(int i, int j) const;
  friend bool operator==(const EdgeProfile&, const EdgeProfile&) = default;
};

struct GraphEdge {
  int from;
  int to;
  EdgeProfile profile;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

enum class Strength { weak, strong };

struct HolderGraph {
  std::vector<PrimePower> vertices;  // ascending by prime
  std::vector<GraphEdge> edges;

  std::uint64_t n() const;  // product of vertex values
  bool square_free() const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  bool has_edge(int from, int to) const;
  const GraphEdge* find_edge(int from, int to) const;

  friend bool operator==(const HolderGraph&, const HolderGraph&) = default;
};

/// Components with at least two vertices, plus the isolated vertices.
/// Connectivity is weak (edge direction ignored).
struct Decomposition {
  std::vector<HolderGraph> components;
  std::vector<PrimePower> isolated;

  /// Product of the isolated vertex values.
  std::uint64_t cyclic_part() const;
};

HolderGraph build_graph(const Factorization& f);

/// Weak/strong classification for cube-free edges incident to a square
/// vertex. Throws std::invalid_argument for edges of any other shape.
Strength edge_strength(const HolderGraph& g, const GraphEdge& e);

Decomposition decompose(const HolderGraph& g);

/// All central subsets of a square-free graph, as vertex bitmasks.
/// A subset is central when every vertex outside it has an edge into it.
/// Throws for non-square-free input or more than 24 vertices.
std::vector<std::uint32_t> central_subsets(const HolderGraph& g);

/// Beware the reversed-sounding convention used throughout: a vertex is
/// initial when its out-degree is 0 and terminal when its in-degree is 0.
std::vector<int> initial_vertices(const HolderGraph& g);
std::vector<int> terminal_vertices(const HolderGraph& g);

std::string vertex_name(const PrimePower& v);

/// DOT rendering; weak edges are dashed.
std::string to_dot(const HolderGraph& g);

/// JSON per the fixed schema:
/// {"n":..,"vertices":[{"p":..,"a":..}],"edges":[{"from":..,"to":..,
///  "strength":"weak"|"strong"|"n/a","pairs":[[i,j],..]}]}
std::string to_json(const HolderGraph& g);

}  // namespace gnum
