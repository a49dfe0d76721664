#include "choosability/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "choosability/error.hpp"
#include "choosability/number_theory.hpp"

namespace choosability {

namespace {

__extension__ using i128 = __int128;

constexpr std::uint64_t kMaxProduct = std::uint64_t{1} << 62;

void require_positive(std::uint64_t n, std::uint64_t c, const char* what) {
  if (n < 1 || c < 1) {
    throw Error(Errc::InvalidArgument, std::string(what) + " requires n >= 1 and c >= 1");
  }
  if (static_cast<i128>(n) * c * (c + 1) > static_cast<i128>(kMaxProduct)) {
    throw Error(Errc::InvalidArgument, std::string(what) + ": n and c too large for exact arithmetic");
  }
}

// n <= lemma3_bound(q, c), compared exactly by cross-multiplication.
bool within_hall_threshold(std::uint64_t n, std::uint64_t q, std::uint64_t c) {
  const i128 lhs = static_cast<i128>(n) * c * (c + 1);
  const i128 rhs = static_cast<i128>(c + 1) * q * q + static_cast<i128>(c + 3) * q - 2 * (static_cast<i128>(c) - 1);
  return lhs <= rhs;
}

}  // namespace

std::string_view to_string(LowerSource s) noexcept {
  switch (s) {
    case LowerSource::Constructive: return "constructive";
    case LowerSource::Ktv: return "ktv";
    case LowerSource::Asymptotic: return "asymptotic";
  }
  return "unknown";
}

std::string_view to_string(UpperSource s) noexcept {
  switch (s) {
    case UpperSource::HallThreshold: return "hall-threshold";
    case UpperSource::TrivialN: return "trivial-n";
  }
  return "unknown";
}

Rational johnson_bound(std::int64_t m, std::int64_t k, std::int64_t c) {
  const std::int64_t den = m * c + k - c;
  if (m < 1 || k < 1 || c < 0 || den <= 0) {
    throw Error(Errc::DegenerateDenominator, "johnson_bound needs m, k >= 1, c >= 0 and mc + k - c > 0");
  }
  return Rational(m * k * k, den);
}

Rational lemma3_bound(std::int64_t q, std::int64_t c) {
  if (q < 1 || c < 1) throw Error(Errc::InvalidArgument, "lemma3_bound requires q >= 1 and c >= 1");
  return Rational((c + 1) * q * q + (c + 3) * q - 2 * (c - 1), c * (c + 1));
}

Rational remark_bound(std::int64_t q, std::int64_t c) {
  const std::int64_t den = c * (q + 1) - 1;
  if (den <= 0) throw Error(Errc::DegenerateDenominator, "remark_bound requires c(q+1) - 1 > 0");
  return Rational(q * q * (q + 2), den);
}

std::int64_t floor(const Rational& r) {
  const auto num = r.numerator();
  const auto den = r.denominator();
  auto quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

std::int64_t ceil(const Rational& r) {
  const auto num = r.numerator();
  const auto den = r.denominator();
  auto quot = num / den;
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

std::uint64_t hall_threshold_q(std::uint64_t n, std::uint64_t c) {
  require_positive(n, c, "hall_threshold_q");
  // lemma3_bound is increasing in q and reaches n by q = isqrt(cn) + 1.
  std::uint64_t lo = 1;
  std::uint64_t hi = isqrt(n * c) + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (within_hall_threshold(n, mid, c)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::uint64_t upper_bound(std::uint64_t n, std::uint64_t c) {
  return std::min(n, hall_threshold_q(n, c) + 1);
}

bool is_admissible(std::uint64_t q, std::uint64_t c) noexcept {
  return c >= 1 && q >= 2 && (q - 1) % c == 0 && c < q - 1 && as_prime_power(q).has_value();
}

std::vector<AdmissiblePrimePower> admissible_prime_powers(std::uint64_t c, std::uint64_t q_max) {
  std::vector<AdmissiblePrimePower> out;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    if (is_admissible(q, c)) out.push_back({q, c});
  }
  return out;
}

std::uint64_t ktv_lower_ceil(std::uint64_t n, std::uint64_t c) {
  const std::uint64_t target = n * c;
  std::uint64_t k = isqrt(target / 2);
  while (static_cast<i128>(2) * k * k < target) ++k;
  return k;
}

LowerBound lower_bound_constructive(std::uint64_t n, std::uint64_t c) {
  require_positive(n, c, "lower_bound_constructive");
  std::optional<std::uint64_t> best_q;
  if (n >= 2) {
    // (q^2-1)/c + 2 <= n  <=>  q^2 <= c(n-2) + 1.
    for (std::uint64_t q = isqrt(c * (n - 2) + 1); q >= 3; --q) {
      if (is_admissible(q, c)) {
        best_q = q;
        break;
      }
    }
  }
  const std::uint64_t ktv = ktv_lower_ceil(n, c);
  LowerBound lb;
  if (best_q && *best_q + 1 >= ktv) {
    lb = {*best_q + 1, LowerSource::Constructive, best_q};
  } else {
    lb = {ktv, LowerSource::Ktv, std::nullopt};
  }
  // chi_l(K_n, c) <= n always; the KTV value overshoots n for tiny n and large c.
  lb.value = std::clamp<std::uint64_t>(lb.value, 1, n);
  return lb;
}

std::uint64_t lower_bound_asymptotic(std::uint64_t n, std::uint64_t c) {
  if (n < 2) throw Error(Errc::InvalidArgument, "lower_bound_asymptotic requires n >= 2");
  require_positive(n, c, "lower_bound_asymptotic");
  const auto value = static_cast<std::int64_t>(isqrt(c * (n - 2) + 1) + 1) - static_cast<std::int64_t>(icbrt_ceil(n));
  return static_cast<std::uint64_t>(std::max<std::int64_t>(1, value));
}

std::optional<std::uint64_t> find_admissible_prime(std::uint64_t n, std::uint64_t c) {
  if (n < 2 || c < 1) return std::nullopt;
  require_positive(n, c, "find_admissible_prime");
  const std::uint64_t x = c * (n - 2) + 1;
  const std::uint64_t root = isqrt(x);
  const std::uint64_t hi = root + 1;
  std::int64_t lo = 0;
  const std::uint64_t cube = icbrt(n);
  if (root * root == x && cube * cube * cube == n) {
    lo = static_cast<std::int64_t>(root + 1) - static_cast<std::int64_t>(cube);
  } else {
    // At least one endpoint term is irrational, so the sum is never an integer.
    const long double real_lo = std::sqrt(static_cast<long double>(x)) + 1.0L -
                                std::cbrt(static_cast<long double>(n));
    lo = static_cast<std::int64_t>(std::ceil(real_lo));
  }
  const auto floor_q = static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2));
  for (std::uint64_t q = hi; q >= floor_q; --q) {
    if ((q - 1) % c == 0 && is_prime(q)) return q;
  }
  return std::nullopt;
}

ExactWindow exact_window(std::uint64_t q, std::uint64_t c) {
  if (!is_admissible(q, c)) {
    throw Error(Errc::AdmissibilityViolated, "(q=" + std::to_string(q) + ", c=" + std::to_string(c) +
                                                 ") is not admissible: need q a prime power, c | q-1, c < q-1");
  }
  const auto hi = floor(lemma3_bound(static_cast<std::int64_t>(q), static_cast<std::int64_t>(c)));
  return {(q * q - 1) / c + 2, static_cast<std::uint64_t>(hi), q + 1};
}

std::pair<double, double> ktv_reference_bounds(std::uint64_t n, std::uint64_t c) {
  const double cn = static_cast<double>(c) * static_cast<double>(n);
  return {std::sqrt(cn / 2.0), std::sqrt(2.0 * std::numbers::e * cn)};
}

BoundsReport bounds_report(std::uint64_t n, std::uint64_t c) {
  require_positive(n, c, "bounds_report");
  BoundsReport r;
  r.n = n;
  r.c = c;

  const auto lb = lower_bound_constructive(n, c);
  r.lower = lb.value;
  r.lower_source = lb.source;
  r.lower_q = lb.q;
  if (n >= 2) {
    r.asymptotic = lower_bound_asymptotic(n, c);
    r.asymptotic_applicable = find_admissible_prime(n, c).has_value();
    if (r.asymptotic_applicable && *r.asymptotic > r.lower) {
      r.lower = std::min(*r.asymptotic, n);
      r.lower_source = LowerSource::Asymptotic;
      r.lower_q.reset();
    }
  }

  r.hall_q = hall_threshold_q(n, c);
  if (n < r.hall_q + 1) {
    r.upper = n;
    r.upper_source = UpperSource::TrivialN;
  } else {
    r.upper = r.hall_q + 1;
    r.upper_source = UpperSource::HallThreshold;
  }
  if (r.lower == r.upper) r.exact = r.lower;
  std::tie(r.ktv_lower, r.ktv_upper) = ktv_reference_bounds(n, c);
  return r;
}

}  // namespace choosability
