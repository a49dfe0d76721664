#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "choosability/number_theory.hpp"

namespace cz = choosability;

namespace {

std::vector<bool> sieve(std::uint32_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

}  // namespace

TEST(NumberTheory, IsPrimeMatchesSieve) {
  const auto prime = sieve(200000);
  for (std::uint64_t n = 0; n < prime.size(); ++n) ASSERT_EQ(cz::is_prime(n), prime[n]) << n;
}

TEST(NumberTheory, IsPrimeLargeValues) {
  EXPECT_TRUE(cz::is_prime(1000000007ULL));
  EXPECT_TRUE(cz::is_prime((1ULL << 61) - 1));
  EXPECT_TRUE(cz::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(cz::is_prime(3215031751ULL));            // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(cz::is_prime(3825123056546413051ULL));   // strong pseudoprime to bases up to 23
  EXPECT_FALSE(cz::is_prime(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_FALSE(cz::is_prime(1000000007ULL * 998244353ULL));
}

TEST(NumberTheory, PrimePowerDecomposition) {
  const auto prime = sieve(5000);
  for (std::uint64_t q = 0; q <= 5000; ++q) {
    std::optional<cz::PrimePower> expected;
    for (std::uint64_t p = 2; p <= q && !expected; ++p) {
      if (!prime[p]) continue;
      std::uint64_t v = p;
      std::uint32_t m = 1;
      while (v < q) {
        v *= p;
        ++m;
      }
      if (v == q) expected = cz::PrimePower{q, p, m};
    }
    ASSERT_EQ(cz::as_prime_power(q), expected) << q;
  }
  EXPECT_EQ(cz::as_prime_power(1ULL << 63), (cz::PrimePower{1ULL << 63, 2, 63}));
  EXPECT_FALSE(cz::as_prime_power(6).has_value());
}

TEST(NumberTheory, FactorizeRebuildsInput) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = rng() % 10000000 + 2;
    std::uint64_t product = 1;
    std::uint64_t last = 0;
    for (const auto& [p, e] : cz::factorize(n)) {
      EXPECT_TRUE(cz::is_prime(p));
      EXPECT_GT(p, last);
      last = p;
      for (std::uint32_t j = 0; j < e; ++j) product *= p;
    }
    EXPECT_EQ(product, n);
  }
}

TEST(NumberTheory, IntegerRoots) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 64);
    const unsigned __int128 s = cz::isqrt(n);
    EXPECT_LE(s * s, n);
    EXPECT_GT((s + 1) * (s + 1), n);
    const unsigned __int128 r = cz::icbrt(n);
    EXPECT_LE(r * r * r, n);
    EXPECT_GT((r + 1) * (r + 1) * (r + 1), n);
    const unsigned __int128 rc = cz::icbrt_ceil(n);
    EXPECT_GE(rc * rc * rc, n);
    if (rc > 0) EXPECT_LT((rc - 1) * (rc - 1) * (rc - 1), n);
  }
  EXPECT_EQ(cz::isqrt(std::numeric_limits<std::uint64_t>::max()), 4294967295ULL);
  EXPECT_EQ(cz::icbrt(std::numeric_limits<std::uint64_t>::max()), 2642245ULL);
  EXPECT_EQ(cz::icbrt_ceil(1000000), 100U);
  EXPECT_EQ(cz::icbrt_ceil(1000001), 101U);
  EXPECT_EQ(cz::icbrt_ceil(0), 0U);
}

TEST(NumberTheory, PowModMatchesRepeatedMultiplication) {
  for (std::uint64_t mod = 2; mod < 60; ++mod) {
    for (std::uint64_t base = 0; base < 60; ++base) {
      std::uint64_t expected = 1 % mod;
      for (std::uint64_t e = 0; e < 30; ++e) {
        ASSERT_EQ(cz::pow_mod(base, e, mod), expected);
        expected = expected * base % mod;
      }
    }
  }
}
