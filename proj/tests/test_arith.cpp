#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gnum/arith.hpp"

using namespace gnum;

TEST_CASE("primality basics") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(191));  // 32661 / 9 / 19
  CHECK_FALSE(is_prime(561));   // Carmichael
  CHECK_FALSE(is_prime(25326001));
  CHECK(is_prime((1ull << 61) - 1));
  CHECK_FALSE(is_prime((1ull << 61) - 3));
}

TEST_CASE("primality agrees with trial division below 10000") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 1; n <= 10000; ++n) CHECK(is_prime(n) == slow(n));
}

TEST_CASE("factorize") {
  CHECK(factorize(1827).entries ==
        std::vector<PrimePower>{{3, 2}, {7, 1}, {29, 1}});
  CHECK(factorize(1).entries.empty());
  CHECK(factorize(1024).entries == std::vector<PrimePower>{{2, 10}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs n up to 20000 and on large samples") {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      CHECK(is_prime(f.entries[i].p));
      CHECK(f.entries[i].a >= 1);
      if (i > 0) CHECK(f.entries[i - 1].p < f.entries[i].p);
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() % 1000000000000ull + 2;
    CHECK(factorize(n).value() == n);
  }
}

TEST_CASE("phi and lambda") {
  CHECK(euler_phi(15) == 8);
  CHECK(lambda(1827) == 4);
  CHECK(lambda(1) == 0);
  CHECK(euler_phi(1) == 1);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t a = rng() % 10000 + 1, b = rng() % 10000 + 1;
    if (gcd(a, b) != 1) continue;
    CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
  }
}

TEST_CASE("cyclic numbers") {
  CHECK(is_cyclic_number(15));
  CHECK_FALSE(is_cyclic_number(6));
  CHECK(is_cyclic_number(255));
  CHECK(is_cyclic_number(1));
}

TEST_CASE("divisibility indicator") {
  CHECK(w(6, 3) == 1);
  CHECK(w(4, 3) == 0);
  CHECK(w(7 - 1, 3) == 1);
  for (std::uint64_t r = 0; r < 50; ++r)
    for (std::uint64_t s = 1; s < 20; ++s)
      CHECK(w(r, s) == (r % s == 0 ? 1 : 0));
}

TEST_CASE("prime in progression") {
  CHECK(prime_in_progression(1, 35, {{1, 3}}, 1000) == 71);
  CHECK(prime_in_progression(1, 2, {}, 100) == 3);
  CHECK(prime_in_progression(1, 5, {}, 100) == 11);
  CHECK(prime_in_progression(1, 7, {}, 20) == std::nullopt);
  CHECK_THROWS_AS(prime_in_progression(3, 9, {}, 100), std::invalid_argument);
}
