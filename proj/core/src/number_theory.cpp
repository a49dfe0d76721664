#include "choosability/number_theory.hpp"

#include <array>
#include <cmath>

namespace choosability {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
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

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  if (is_prime(q)) return PrimePower{q, q, 1};
  // A proper power p^m with m >= 2 has p <= sqrt(q); the smallest prime
  // factor found by trial division must then account for all of q.
  for (std::uint64_t p = 2; p <= q / p; ++p) {
    if (q % p != 0) continue;
    std::uint64_t rest = q;
    std::uint32_t m = 0;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{q, p, m};
  }
  return std::nullopt;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::uint64_t icbrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(n)));
  auto cube_le = [n](std::uint64_t x) {
    return static_cast<u128>(x) * x * x <= n;
  };
  while (r > 0 && !cube_le(r)) --r;
  while (cube_le(r + 1)) ++r;
  return r;
}

std::uint64_t icbrt_ceil(std::uint64_t n) noexcept {
  const std::uint64_t r = icbrt(n);
  return r * r * r == n ? r : r + 1;
}

}  // namespace choosability
