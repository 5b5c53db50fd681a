#pragma once

// Exhaustive enumeration of small connected DAG shapes, the admissibility
// sweep reproducing the square-free case analysis for g in {6, 7}, and
// realization of abstract shapes as concrete square-free integers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnum/holder.hpp"

namespace gnum {

struct CensusParams {
  int max_vertices;
  int max_in;
  int max_out;
  int target;  // the g value the sweep selects for
};

struct CensusEntry {
  /// Canonical shape; at most the unique out-degree >= 2 vertex is labeled.
  AbstractGraph graph;
  std::optional<std::uint64_t> label;  // the prime on that vertex, if any
  std::uint64_t g;
  std::uint64_t realization;  // smallest n whose graph is exactly this shape
};

struct CensusReport {
  CensusParams params;
  std::vector<CensusEntry> entries;
};

/// All weakly connected DAGs on 2..max_v vertices with in-degrees <= max_in
/// and out-degrees <= max_out, one representative per isomorphism class.
/// Requires max_v <= 6, max_in <= 2, max_out <= 2.
std::vector<AbstractGraph> enumerate_graphs(int max_v, int max_in,
                                            int max_out);

/// Sweep enumerate_graphs(5, 2, 2), label the single high-out-degree vertex
/// with primes up to 13, and keep the shapes that both evaluate to `target`
/// and are realizable as the graph of some integer. target must be 6 or 7.
CensusReport admissible_squarefree(int target);

/// Smallest n <= bound whose Hoelder graph is isomorphic to the pattern,
/// matching labels where the pattern has them; nullopt if none.
std::optional<std::uint64_t> realize(const AbstractGraph& pattern,
                                     std::uint64_t bound);

/// {"params": {...}, "entries": [{"graph": {"vertices": v, "edges": [[i,j]]},
///  "labels": {"p": int}|null, "g": int, "n": int}]}
std::string to_json(const CensusReport& report);

}  // namespace gnum
