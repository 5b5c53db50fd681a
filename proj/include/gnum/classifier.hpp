#pragma once

// The classification theorems for g(n) in {1, 2, 3, 6, 7} as decidable
// predicates on n. Each rule encodes one clause as an exact annotated-graph
// pattern: a candidate matches only if its generalized Hoelder graph equals
// the pattern, with no further congruences (extra edges or strengthened
// arrows) allowed.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnum/graph.hpp"

namespace gnum {

/// k = 4 and k = 5 are settled in the literature but not encoded here.
struct UnclassifiedKError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ClassificationRule {
  std::string id;     // e.g. "T6.V" (clauses of the k=6 theorem are I..VII)
  int target_k;
  std::string clause; // human-readable statement of the condition
};

struct Verdict {
  int k = 0;  // 0 means unknown
  std::string matched_rule;
  std::map<std::string, std::uint64_t> witness;

  bool known() const { return k != 0; }
};

/// One successful pattern match on a connected component.
struct ComponentMatch {
  int g;
  std::string rule;  // sub-clause id, e.g. "T6.V.b"
  std::map<std::string, std::uint64_t> witness;
};

/// All rule matches of one connected component (normally zero or one).
std::vector<ComponentMatch> component_matches(const HolderGraph& component);

/// The full static rule set: cyclic rule, the g=2/3 clauses and the
/// seven/nine clauses of the k=6 / k=7 theorems.
const std::vector<ClassificationRule>& rules();

/// Ids of every individually matchable clause (sub-clauses expanded).
const std::vector<std::string>& sub_clause_ids();

Verdict classify(std::uint64_t n);

/// All n <= max_n with classify(n).k == k, ascending. jobs = 0 means
/// hardware parallelism. Throws UnclassifiedKError for k in {4, 5}.
std::vector<std::uint64_t> solve(int k, std::uint64_t max_n, unsigned jobs = 1);

/// Search for a witness of one sub-clause via primes in arithmetic
/// progressions, verified through classify.
std::optional<std::uint64_t> clause_witness(const std::string& sub_clause_id,
                                            std::uint64_t bound);

}  // namespace gnum
