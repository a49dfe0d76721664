#include "choosability/gf.hpp"

#include <limits>
#include <string>

#include "choosability/error.hpp"

namespace choosability {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo the monic polynomial f over GF(p).
Poly poly_rem(Poly a, std::span<const std::uint32_t> f, std::uint32_t p) {
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - df;
      for (std::size_t j = 0; j < df; ++j) {
        const std::uint64_t sub = lead * f[j] % p;
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (auto v : a) {
    if (v != 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = ipow(p, m);
  Poly f(m + 1, 0);
  f[m] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    // The constant term is the most significant digit of t.
    std::uint64_t rest = t;
    for (std::uint32_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  // Irreducible polynomials of every degree exist over every prime field.
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  if (monic.empty() || monic.back() != 1) {
    throw Error(Errc::InvalidArgument, "is_irreducible expects a monic polynomial");
  }
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  Poly divisor;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    divisor.assign(d + 1, 0);
    divisor[d] = 1;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::uint64_t rest = t;
      for (std::size_t j = 0; j < d; ++j) {
        divisor[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_zero(poly_rem(Poly(monic.begin(), monic.end()), divisor, p))) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) {
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  if (q > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidArgument, "field size exceeds the 32-bit element encoding");
  }
  pp_ = *pp;
  modulus_ = pp_.m == 1 ? Poly{1} : smallest_irreducible(static_cast<std::uint32_t>(pp_.p), pp_.m);
  for (const auto& [prime, exp] : factorize(q - 1)) group_order_primes_.push_back(prime);
}

FieldElement FiniteField::element(std::uint64_t index) const {
  if (index >= pp_.q) {
    throw Error(Errc::InvalidArgument,
                "element index " + std::to_string(index) + " outside GF(" + std::to_string(pp_.q) + ")");
  }
  return {static_cast<std::uint32_t>(index)};
}

std::vector<std::uint32_t> FiniteField::digits(FieldElement x) const {
  const auto p = characteristic();
  std::vector<std::uint32_t> d(pp_.m);
  std::uint32_t rest = x.index;
  for (auto& v : d) {
    v = rest % p;
    rest /= p;
  }
  return d;
}

FieldElement FiniteField::from_digits(std::span<const std::uint32_t> d) const {
  const auto p = characteristic();
  if (d.size() != pp_.m) throw Error(Errc::InvalidArgument, "digit vector has wrong length");
  std::uint64_t index = 0;
  for (std::size_t j = d.size(); j-- > 0;) {
    if (d[j] >= p) throw Error(Errc::InvalidArgument, "digit out of range");
    index = index * p + d[j];
  }
  return {static_cast<std::uint32_t>(index)};
}

FieldElement FiniteField::add(FieldElement x, FieldElement y) const noexcept {
  const auto p = characteristic();
  if (pp_.m == 1) {
    return {static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.index) + y.index) % p)};
  }
  if (p == 2) return {x.index ^ y.index};
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  std::uint32_t a = x.index;
  std::uint32_t b = y.index;
  for (std::uint32_t j = 0; j < pp_.m; ++j) {
    result += place * ((a % p + b % p) % p);
    a /= p;
    b /= p;
    place *= p;
  }
  return {static_cast<std::uint32_t>(result)};
}

FieldElement FiniteField::neg(FieldElement x) const noexcept {
  const auto p = characteristic();
  if (pp_.m == 1) return {x.index == 0 ? 0U : p - x.index};
  if (p == 2) return x;
  std::uint64_t result = 0;
  std::uint64_t place = 1;
  std::uint32_t a = x.index;
  for (std::uint32_t j = 0; j < pp_.m; ++j) {
    result += place * ((p - a % p) % p);
    a /= p;
    place *= p;
  }
  return {static_cast<std::uint32_t>(result)};
}

FieldElement FiniteField::sub(FieldElement x, FieldElement y) const noexcept { return add(x, neg(y)); }

FieldElement FiniteField::mul(FieldElement x, FieldElement y) const noexcept {
  if (pp_.m == 1) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(x.index) * y.index % pp_.p)};
  }
  return mul_extension(x, y);
}

FieldElement FiniteField::mul_extension(FieldElement x, FieldElement y) const noexcept {
  const auto p = characteristic();
  const auto m = pp_.m;
  const auto a = digits(x);
  const auto b = digits(y);
  Poly product(2 * m - 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      product[i + j] = static_cast<std::uint32_t>(
          (product[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  auto reduced = poly_rem(std::move(product), modulus_, p);
  reduced.resize(m, 0);
  std::uint64_t index = 0;
  for (std::uint32_t j = m; j-- > 0;) index = index * p + reduced[j];
  return {static_cast<std::uint32_t>(index)};
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t e) const noexcept {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return result;
}

FieldElement FiniteField::inv(FieldElement x) const {
  if (x.index == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(x, pp_.q - 2);
}

std::uint64_t FiniteField::element_order(FieldElement x) const {
  if (x.index == 0) throw Error(Errc::ZeroHasNoOrder, "zero has no multiplicative order");
  std::uint64_t t = pp_.q - 1;
  for (auto r : group_order_primes_) {
    while (t % r == 0 && pow(x, t / r) == one()) t /= r;
  }
  return t;
}

FieldElement FiniteField::find_order_c_element(std::uint64_t c) const {
  if (c == 0 || (pp_.q - 1) % c != 0) {
    throw Error(Errc::OrderUnavailable, "no element of order " + std::to_string(c) + " in GF(" +
                                            std::to_string(pp_.q) + ")^*: c must divide q-1");
  }
  std::vector<std::uint64_t> c_primes;
  for (const auto& [prime, exp] : factorize(c)) c_primes.push_back(prime);
  for (std::uint32_t idx = 1; idx < pp_.q; ++idx) {
    const FieldElement x{idx};
    if (pow(x, c) != one()) continue;
    bool exact = true;
    for (auto r : c_primes) {
      if (pow(x, c / r) == one()) {
        exact = false;
        break;
      }
    }
    if (exact) return x;
  }
  // The multiplicative group is cyclic, so an element of every order c | q-1 exists.
  throw Error(Errc::OrderUnavailable, "order search exhausted");
}

std::vector<FieldElement> FiniteField::subgroup(std::uint64_t c) const {
  const FieldElement h = find_order_c_element(c);
  std::vector<FieldElement> powers;
  powers.reserve(c);
  FieldElement cur = one();
  for (std::uint64_t i = 0; i < c; ++i) {
    powers.push_back(cur);
    cur = mul(cur, h);
  }
  return powers;
}

}  // namespace choosability
