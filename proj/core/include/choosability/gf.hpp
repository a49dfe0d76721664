#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "choosability/number_theory.hpp"

namespace choosability {

/// An element of GF(q), identified by its index in [0, q). The index is the
/// base-p reading of the element's polynomial coefficients (digit j is the
/// coefficient of x^j), so 0 and 1 are the additive and multiplicative
/// identities in every field.
struct FieldElement {
  std::uint32_t index = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Arithmetic context for GF(q), q = p^m.
///
/// Prime fields use plain modular arithmetic. Extension fields are
/// GF(p)[x] / (f) where f is the lexicographically smallest monic irreducible
/// polynomial of degree m, compared by coefficient sequence starting at the
/// constant term. The choice is deterministic so element indices, and every
/// object built from them, are reproducible.
///
/// Immutable after construction.
class FiniteField {
 public:
  /// Throws Error(NotPrimePower) for q < 2 or q with two distinct prime factors,
  /// Error(InvalidArgument) when q does not fit the 32-bit element encoding.
  explicit FiniteField(std::uint64_t q);

  const PrimePower& prime_power() const noexcept { return pp_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(pp_.q); }
  std::uint32_t characteristic() const noexcept { return static_cast<std::uint32_t>(pp_.p); }
  std::uint32_t degree() const noexcept { return pp_.m; }

  /// m+1 coefficients, constant term first, leading 1 last. For prime fields
  /// this is the single coefficient {1}.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Throws Error(InvalidArgument) for index >= q.
  FieldElement element(std::uint64_t index) const;

  FieldElement add(FieldElement x, FieldElement y) const noexcept;
  FieldElement sub(FieldElement x, FieldElement y) const noexcept;
  FieldElement neg(FieldElement x) const noexcept;
  FieldElement mul(FieldElement x, FieldElement y) const noexcept;
  /// Throws Error(DivisionByZero) for x = 0.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const noexcept;

  /// Smallest t >= 1 with x^t = 1. Throws Error(ZeroHasNoOrder) for x = 0.
  std::uint64_t element_order(FieldElement x) const;

  /// Smallest-index element of multiplicative order exactly c.
  /// Throws Error(OrderUnavailable) unless c >= 1 and c | q-1.
  FieldElement find_order_c_element(std::uint64_t c) const;

  /// {1, h, ..., h^(c-1)} for h = find_order_c_element(c), in power order.
  std::vector<FieldElement> subgroup(std::uint64_t c) const;

  /// Base-p digits of x (length m), constant term first.
  std::vector<std::uint32_t> digits(FieldElement x) const;
  /// Inverse of digits(); throws Error(InvalidArgument) on a malformed digit vector.
  FieldElement from_digits(std::span<const std::uint32_t> digits) const;

 private:
  FieldElement mul_extension(FieldElement x, FieldElement y) const noexcept;

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  // Prime factors of q-1, used by the order computations.
  std::vector<std::uint64_t> group_order_primes_;
};

/// Exhaustive irreducibility test of a monic polynomial over GF(p) by trial
/// division with every monic polynomial of degree 1..deg/2. Coefficients are
/// constant term first.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace choosability
