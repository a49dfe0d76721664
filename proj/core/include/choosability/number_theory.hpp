#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace choosability {

/// q = p^m with p prime and m >= 1.
struct PrimePower {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t m = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Returns the decomposition when q is a prime power, std::nullopt otherwise
/// (including q < 2).
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

/// Prime factorization by trial division, ascending primes with multiplicity.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n) noexcept;
std::uint64_t icbrt(std::uint64_t n) noexcept;       // floor(n^(1/3))
std::uint64_t icbrt_ceil(std::uint64_t n) noexcept;  // ceil(n^(1/3))

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

}  // namespace choosability
