#pragma once

// Exact integer number theory on 64-bit inputs: deterministic primality,
// factorization, totient, divisibility indicators and prime search in
// arithmetic progressions. Everything here is a pure function.

#include <cstdint>
#include <optional>
#include <vector>

namespace gnum {

/// One prime-power entry of a factorization.
struct PrimePower {
  std::uint64_t p;
  unsigned a;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod p_i^{a_i} with strictly increasing primes. n = 1 is the empty list.
struct Factorization {
  std::vector<PrimePower> entries;

  std::uint64_t value() const;
  /// Total number of prime factors counted with multiplicity.
  unsigned lambda() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime(std::uint64_t n);

/// Factorize n >= 1 (trial division + Pollard-Brent for large cofactors).
/// Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t n);

/// Number of prime factors with multiplicity; lambda(1) = 0.
unsigned lambda(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// n is cyclic (g(n) = 1) iff gcd(n, phi(n)) = 1.
bool is_cyclic_number(std::uint64_t n);

/// Indicator w_r(s) = 1 if s | r, else 0.
int w(std::uint64_t r, std::uint64_t s);

/// A constraint "p != residue (mod modulus)" for prime searches.
struct AvoidCongruence {
  std::uint64_t residue;
  std::uint64_t modulus;
};

/// Smallest prime p <= bound with p == residue (mod modulus) avoiding every
/// listed congruence, or nullopt. Requires gcd(residue, modulus) = 1.
std::optional<std::uint64_t> prime_in_progression(
    std::uint64_t residue, std::uint64_t modulus,
    const std::vector<AvoidCongruence>& avoid, std::uint64_t bound);

/// (base^exp) mod m, m > 0.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace gnum
