#pragma once

// Closed-form counting for the cube-free families with few prime factors,
// and the master dispatch computing g(n) exactly or reporting why it cannot.

#include <cstdint>
#include <optional>
#include <string>

#include "gnum/graph.hpp"

namespace gnum {

enum class UnsupportedReason {
  fourth_power,      // some p^a with a >= 4 divides n
  even_square_form,  // a square/cube family outside the odd-prime hypotheses
  unclassified_shape,
  too_large,
};

struct CountResult {
  enum class Status { exact, unsupported };

  Status status = Status::exact;
  std::uint64_t value = 0;  // meaningful only when exact
  UnsupportedReason reason = UnsupportedReason::unclassified_shape;
  std::optional<std::uint64_t> lower_bound;

  bool exact() const { return status == Status::exact; }
  static CountResult make_exact(std::uint64_t v);
  static CountResult make_unsupported(
      UnsupportedReason r, std::optional<std::uint64_t> lb = std::nullopt);
};

std::string reason_string(UnsupportedReason r);

/// g(p), g(p^2), g(p^3) = 1, 2, 5; a >= 4 is unsupported with the proven
/// lower bound 14.
CountResult g_prime_power(std::uint64_t p, unsigned a);

/// g(2 p^2) = 5 for odd p.
std::uint64_t g_2p2(std::uint64_t p);

/// g(p^2 q) for distinct odd primes.
std::uint64_t g_p2q(std::uint64_t p, std::uint64_t q);

/// g(p^3 q) for distinct odd primes.
std::uint64_t g_p3q(std::uint64_t p, std::uint64_t q);

/// g(p^2 q^2) for odd primes p < q.
std::uint64_t g_p2q2(std::uint64_t p, std::uint64_t q);

/// g(p^2 q r) = h(n) + k(n) for distinct odd primes with q < r.
std::uint64_t g_p2qr(std::uint64_t p, std::uint64_t q, std::uint64_t r);

/// g(p^2 q r s) for distinct odd primes: exactly 7 when q, r are weakly
/// joined to p^2, p^2 weakly to s, and no other edge exists; other connected
/// shapes are unsupported (lower bound 8 where the shape is provably
/// inadmissible).
CountResult g_p2qrs(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                    std::uint64_t s);

/// Count for one connected component of a Hoelder graph.
CountResult count_component(const HolderGraph& component);

/// Master dispatch: decompose the graph of n and multiply exact counts.
CountResult count(std::uint64_t n);

}  // namespace gnum
