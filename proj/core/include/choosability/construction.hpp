#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "choosability/gf.hpp"
#include "choosability/list_assignment.hpp"

namespace choosability {

/// An orbit <a,b> of F x F \ {(0,0)} under coordinatewise multiplication by
/// the order-c subgroup H. `a`, `b` form the lexicographically smallest
/// member (by index pair); `id` is the orbit's rank in representative order.
struct ProjClass {
  FieldElement a;
  FieldElement b;
  std::uint32_t id = 0;

  friend bool operator==(const ProjClass&, const ProjClass&) = default;
};

/// The (q^2-1)/c orbits of nonzero pairs under H, with the incidence
/// structure <x,y> in L<a,b>  <=>  ax + by in H.
class ClassSpace {
 public:
  /// Throws Error(OrderUnavailable) unless c | q-1.
  ClassSpace(FiniteField field, std::uint32_t c);

  const FiniteField& field() const noexcept { return field_; }
  std::uint32_t c() const noexcept { return c_; }
  /// Generator of H (smallest-index element of order c).
  FieldElement generator() const noexcept { return subgroup_.at(1 % subgroup_.size()); }
  std::span<const FieldElement> subgroup() const noexcept { return subgroup_; }

  /// All classes sorted by representative; classes()[i].id == i.
  std::span<const ProjClass> classes() const noexcept { return classes_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(classes_.size()); }

  /// Throws Error(ZeroPair) for (0,0).
  const ProjClass& class_of(FieldElement a, FieldElement b) const;

  /// L<a,b> as ascending class ids; always q of them.
  std::vector<std::uint32_t> list_of_class(std::uint32_t id) const;

  /// V_m: classes of the nonzero solutions of y = m x, ascending ids.
  std::vector<std::uint32_t> origin_line(FieldElement slope) const;

 private:
  std::uint64_t pair_key(FieldElement a, FieldElement b) const noexcept {
    return static_cast<std::uint64_t>(a.index) * field_.size() + b.index;
  }
  std::uint32_t class_id(FieldElement a, FieldElement b) const;

  FiniteField field_;
  std::uint32_t c_;
  std::vector<FieldElement> subgroup_;
  std::vector<ProjClass> classes_;
  std::vector<std::uint64_t> rep_keys_;  // pair_key of each representative, ascending
};

struct Hypergraph {
  std::uint32_t n_vertices = 0;
  std::vector<std::vector<std::uint32_t>> edges;  // each ascending
  std::uint32_t uniformity = 0;
  std::uint32_t intersection_cap = 0;
};

/// Vertices and edges are both indexed by class id; edge i is L of class i.
Hypergraph furedi_hypergraph(std::uint64_t q, std::uint32_t c);

/// Throws Error(AdmissibilityViolated) unless c | q-1 and c < q-1.
void require_admissible(std::uint64_t q, std::uint64_t c);

/// The Füredi hypergraph plus a vertex x (id (q^2-1)/c) and two bundle edges
/// {x} u V_0 u ... u V_{c-1} and {x} u V_c u ... u V_{2c-1}, slopes taken in
/// field-index order.
Hypergraph augmented_hypergraph(std::uint64_t q, std::uint32_t c);

/// List assignment on K_n, n = (q^2-1)/c + 2, whose lists are the edges of
/// augmented_hypergraph(q, c) in order. Only n-1 colors exist, so it has no
/// proper coloring.
ListAssignment hard_instance(std::uint64_t q, std::uint32_t c);

struct DesignViolation {
  enum class Kind { EdgeSize, Intersection, VertexOutOfRange, RepeatedVertex };
  Kind kind;
  std::uint32_t edge = 0;
  std::optional<std::uint32_t> other_edge;
  std::optional<std::uint32_t> vertex;
  std::uint32_t observed = 0;
};

struct DesignReport {
  std::uint32_t n_vertices = 0;
  std::uint32_t n_edges = 0;
  std::uint32_t expected_uniformity = 0;
  std::uint32_t intersection_cap = 0;
  std::optional<std::uint32_t> uniformity;  // set iff all edges share one size
  std::uint32_t max_intersection = 0;
  std::map<std::uint32_t, std::uint64_t> intersection_histogram;  // size -> edge pairs
  std::map<std::uint32_t, std::uint32_t> degree_histogram;        // degree -> vertices
  /// Only evaluated for square incidence (as many edges as vertices).
  std::optional<bool> incidence_symmetric;
  std::vector<DesignViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// Every pairwise intersection size lies in {0, cap}.
  bool intersection_dichotomy() const;
  bool regular(std::uint32_t degree) const;
};

/// Checks q-uniformity and the pairwise intersection cap c; never throws on
/// bad input, every defect is reported with a witness.
DesignReport verify_design(const Hypergraph& h, std::uint64_t q, std::uint32_t c);

}  // namespace choosability
