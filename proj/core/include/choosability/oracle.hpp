#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "choosability/list_assignment.hpp"

namespace choosability {

/// Simple undirected graph on at most kMaxVertices vertices, stored as
/// neighbor bitmasks.
class SmallGraph {
 public:
  static constexpr std::uint32_t kMaxVertices = 16;

  explicit SmallGraph(std::uint32_t n);
  static SmallGraph complete(std::uint32_t n);
  static SmallGraph edgeless(std::uint32_t n) { return SmallGraph(n); }
  static SmallGraph path(std::uint32_t n);
  /// Bit i of `mask` selects the i-th pair in the order (0,1), (0,2), ...,
  /// (0,n-1), (1,2), ..., (n-2,n-1).
  static SmallGraph from_edge_mask(std::uint32_t n, std::uint64_t mask);

  void add_edge(std::uint32_t u, std::uint32_t v);

  std::uint32_t n() const noexcept { return n_; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const noexcept { return (adj_[u] >> v) & 1U; }
  std::uint32_t neighbors(std::uint32_t v) const noexcept { return adj_[v]; }
  std::uint32_t degree(std::uint32_t v) const noexcept;
  std::uint32_t max_degree() const noexcept;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  /// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given order.
  SmallGraph induced(std::span<const std::uint32_t> vertices) const;

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> adj_;
};

/// Refuse any enumeration with n * k above this many list cells.
inline constexpr std::uint32_t kDefaultSearchCap = 16;

/// Return false to stop the enumeration early.
using AssignmentVisitor = std::function<bool(const ListAssignment&)>;

/// Visits each (k,c)-list assignment of G exactly once up to renaming colors.
/// Only adjacent vertices are held to the overlap cap c. Emitted assignments
/// are in canonical form (see canonicalize()), so color ids appear in
/// restricted-growth order when the lists are read vertex by vertex.
///
/// Returns the number of assignments visited. Throws Error(SearchTooLarge)
/// when n * k exceeds `cap`.
std::uint64_t enumerate_canonical_assignments(const SmallGraph& g, std::uint32_t k, std::uint32_t c,
                                              const AssignmentVisitor& visit,
                                              std::uint32_t cap = kDefaultSearchCap);

/// The complete-graph case.
std::uint64_t enumerate_canonical_assignments(std::uint32_t n, std::uint32_t k, std::uint32_t c,
                                              const AssignmentVisitor& visit,
                                              std::uint32_t cap = kDefaultSearchCap);

/// Canonical representative of the color-permutation orbit of `l`.
///
/// Each used color is identified with the set of vertices whose lists contain
/// it. These sets are ordered by reading their membership bits from vertex 0
/// upward, with "contains" ranking first, and colors are renumbered in that
/// order. Unused colors are dropped, so num_colors becomes the number of
/// distinct colors in use.
ListAssignment canonicalize(const ListAssignment& l);

/// True iff G has a proper coloring from L (backtracking, highest degree first).
bool list_colorable_graph(const SmallGraph& g, const ListAssignment& l);

struct ExactResult {
  std::uint32_t n = 0;
  std::uint32_t c = 0;
  std::uint32_t chi_l = 0;
  /// First canonical (chi_l - 1, c)-assignment with no proper coloring.
  std::optional<ListAssignment> defeated_by;
  std::uint64_t assignments_checked = 0;
};

/// chi_l(K_n, c) by exhaustive canonical enumeration, each instance decided by
/// the matching solver.
ExactResult exact_chi_l_complete(std::uint32_t n, std::uint32_t c, std::uint32_t cap = kDefaultSearchCap);

/// chi_l(G, c) by exhaustive enumeration and backtracking coloring.
ExactResult exact_chi_l_graph(const SmallGraph& g, std::uint32_t c, std::uint32_t cap = kDefaultSearchCap);

inline constexpr std::uint32_t kMaxProbeVertices = 5;

struct ProbeLevel {
  std::uint32_t n = 0;
  std::uint32_t chi_complete = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t assignments_checked = 0;
};

struct Counterexample {
  SmallGraph graph;
  ListAssignment assignment;  // a (chi_l(K_n,c), c)-assignment on graph with no coloring
};

struct ProbeReport {
  std::uint32_t n_max = 0;
  std::uint32_t c = 0;
  std::uint32_t k_cap = 0;
  std::vector<ProbeLevel> levels;
  std::optional<Counterexample> counterexample;
};

/// For every labeled graph G on n <= n_max vertices, checks that every
/// (chi_l(K_n,c), c)-assignment on G is colorable, i.e. chi_l(G,c) <= chi_l(K_n,c).
/// Throws Error(SearchTooLarge) for n_max > kMaxProbeVertices, when
/// chi_l(K_n,c) exceeds k_cap, or when an enumeration exceeds `cap`.
ProbeReport conjecture_probe(std::uint32_t n_max, std::uint32_t c, std::uint32_t k_cap,
                             std::uint32_t cap = kDefaultSearchCap);

}  // namespace choosability
