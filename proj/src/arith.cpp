#include "gnum/arith.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gnum {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  while (true) {
    std::uint64_t y = dist(rng), c = dist(rng), m = 128;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mul_mod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out,
                std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n, rng);
  factor_rec(d, out, rng);
  factor_rec(n / d, out, rng);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= 1024 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p == 0) {
      unsigned a = 0;
      while (rest % p == 0) {
        rest /= p;
        ++a;
      }
      f.entries.push_back({p, a});
    }
  }
  if (rest > 1) {
    if (is_prime(rest)) {
      f.entries.push_back({rest, 1});
    } else {
      std::vector<std::uint64_t> primes;
      std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ n);
      factor_rec(rest, primes, rng);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.entries.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  return f;
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, a] : entries)
    for (unsigned i = 0; i < a; ++i) n *= p;
  return n;
}

unsigned Factorization::lambda() const {
  unsigned s = 0;
  for (const auto& e : entries) s += e.a;
  return s;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = 1;
  for (const auto& [p, a] : factorize(n).entries) {
    result *= p - 1;
    for (unsigned i = 1; i < a; ++i) result *= p;
  }
  return result;
}

unsigned lambda(std::uint64_t n) { return factorize(n).lambda(); }

bool is_cyclic_number(std::uint64_t n) {
  return std::gcd(n, euler_phi(n)) == 1;
}

int w(std::uint64_t r, std::uint64_t s) { return r % s == 0 ? 1 : 0; }

std::optional<std::uint64_t> prime_in_progression(
    std::uint64_t residue, std::uint64_t modulus,
    const std::vector<AvoidCongruence>& avoid, std::uint64_t bound) {
  if (modulus == 0) throw std::invalid_argument("prime_in_progression: modulus");
  residue %= modulus;
  if (std::gcd(residue, modulus) != 1)
    throw std::invalid_argument(
        "prime_in_progression: residue and modulus must be coprime");
  for (std::uint64_t p = residue == 0 ? modulus : residue; p <= bound;
       p += modulus) {
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& c : avoid) {
      if (p % c.modulus == c.residue % c.modulus) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace gnum
