#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace choosability {

using Rational = boost::rational<std::int64_t>;

/// Lower bound m k^2 / (m c + k - c) on the union of m sets of size >= k that
/// pairwise share at most c elements. Throws Error(DegenerateDenominator) when
/// the denominator is not positive or m, k < 1.
Rational johnson_bound(std::int64_t m, std::int64_t k, std::int64_t c);

/// (q^2 + (c+3)/(c+1) q - 2(c-1)/(c+1)) / c: the minimum vertex count of a
/// q-uniform hypergraph with q+2 edges pairwise meeting in at most c-1 vertices.
/// Also the Hall threshold: lists of size q+1 always admit a coloring of K_n
/// for n up to this value.
Rational lemma3_bound(std::int64_t q, std::int64_t c);

/// q^2 (q+2) / (c(q+1) - 1), the threshold obtained from johnson_bound instead.
Rational remark_bound(std::int64_t q, std::int64_t c);

/// floor / ceil for positive-denominator rationals.
std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

/// min(n, q* + 1) where q* is the least positive integer with n <= lemma3_bound(q*, c).
std::uint64_t upper_bound(std::uint64_t n, std::uint64_t c);

/// The least q with n <= lemma3_bound(q, c) (exact comparison).
std::uint64_t hall_threshold_q(std::uint64_t n, std::uint64_t c);

struct AdmissiblePrimePower {
  std::uint64_t q = 0;
  std::uint64_t c = 0;

  friend bool operator==(const AdmissiblePrimePower&, const AdmissiblePrimePower&) = default;
};

/// q a prime power, c | q-1 and c < q-1.
bool is_admissible(std::uint64_t q, std::uint64_t c) noexcept;

std::vector<AdmissiblePrimePower> admissible_prime_powers(std::uint64_t c, std::uint64_t q_max);

enum class LowerSource { Constructive, Ktv, Asymptotic };
enum class UpperSource { HallThreshold, TrivialN };

std::string_view to_string(LowerSource s) noexcept;
std::string_view to_string(UpperSource s) noexcept;

struct LowerBound {
  std::uint64_t value = 1;
  LowerSource source = LowerSource::Ktv;
  std::optional<std::uint64_t> q;  // the admissible q behind a constructive bound
};

/// Smallest integer k with k >= sqrt(c n / 2), by exact integer comparison.
std::uint64_t ktv_lower_ceil(std::uint64_t n, std::uint64_t c);

/// max(q+1 over admissible q with (q^2-1)/c + 2 <= n, ceil(sqrt(cn/2))),
/// clamped to [1, n]. Ties go to the constructive bound.
LowerBound lower_bound_constructive(std::uint64_t n, std::uint64_t c);

/// floor(sqrt(c(n-2)+1) + 1) - ceil(n^(1/3)), floored at 1. Only meaningful
/// for large n. Throws Error(InvalidArgument) for n < 2.
std::uint64_t lower_bound_asymptotic(std::uint64_t n, std::uint64_t c);

/// Largest prime q with c | q-1 in [sqrt(c(n-2)+1) + 1 - n^(1/3), sqrt(c(n-2)+1) + 1],
/// or nothing (an expected outcome for small n).
std::optional<std::uint64_t> find_admissible_prime(std::uint64_t n, std::uint64_t c);

struct ExactWindow {
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::uint64_t value = 0;  // q + 1

  friend bool operator==(const ExactWindow&, const ExactWindow&) = default;
};

/// [(q^2-1)/c + 2, floor(lemma3_bound(q, c))], on which chi_l(K_n, c) = q + 1.
/// Throws Error(AdmissibilityViolated) for inadmissible (q, c).
ExactWindow exact_window(std::uint64_t q, std::uint64_t c);

/// (sqrt(cn/2), sqrt(2ecn)); floating point, display only.
std::pair<double, double> ktv_reference_bounds(std::uint64_t n, std::uint64_t c);

struct BoundsReport {
  std::uint64_t n = 0;
  std::uint64_t c = 0;
  std::uint64_t lower = 1;
  LowerSource lower_source = LowerSource::Ktv;
  std::optional<std::uint64_t> lower_q;
  std::uint64_t upper = 1;
  UpperSource upper_source = UpperSource::TrivialN;
  std::uint64_t hall_q = 0;
  std::optional<std::uint64_t> exact;
  std::optional<std::uint64_t> asymptotic;  // lower_bound_asymptotic, when n >= 2
  bool asymptotic_applicable = false;      // find_admissible_prime succeeded
  double ktv_lower = 0.0;
  double ktv_upper = 0.0;
};

/// Throws Error(InvalidArgument) for n < 1 or c < 1.
BoundsReport bounds_report(std::uint64_t n, std::uint64_t c);

}  // namespace choosability
