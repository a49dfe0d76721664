#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "choosability/list_assignment.hpp"

namespace choosability {

/// Bipartite graph joining vertex v of K_n to every color in L(v).
struct VertexColorGraph {
  std::uint32_t n_left = 0;
  std::uint32_t n_right = 0;
  std::vector<std::vector<Color>> adjacency;  // left vertex -> colors, ascending

  std::vector<std::uint32_t> right_degrees() const;
};

/// Throws Error(ColorOutOfRange) when a list mentions a color >= num_colors.
VertexColorGraph build_adjacency(const ListAssignment& l);

inline constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();

struct Matching {
  std::vector<std::uint32_t> mate_left;   // color of each vertex or kUnmatched
  std::vector<std::uint32_t> mate_right;  // vertex of each color or kUnmatched
  std::uint32_t size = 0;
};

/// Hopcroft-Karp, O(E sqrt(V)).
Matching max_matching(const VertexColorGraph& g);

/// S with |N(S)| < |S|: a witness that no saturating matching exists.
struct HallViolator {
  std::vector<std::uint32_t> vertices;  // S, ascending
  std::vector<Color> neighborhood;      // N(S), ascending

  std::uint32_t deficiency() const noexcept {
    return static_cast<std::uint32_t>(vertices.size() - neighborhood.size());
  }
  friend bool operator==(const HallViolator&, const HallViolator&) = default;
};

using Coloring = std::vector<Color>;

class ColorabilityResult {
 public:
  explicit ColorabilityResult(Coloring coloring) : value_(std::move(coloring)) {}
  explicit ColorabilityResult(HallViolator violator) : value_(std::move(violator)) {}

  bool colorable() const noexcept { return std::holds_alternative<Coloring>(value_); }
  const Coloring& coloring() const { return std::get<Coloring>(value_); }
  const HallViolator& violator() const { return std::get<HallViolator>(value_); }

  friend bool operator==(const ColorabilityResult&, const ColorabilityResult&) = default;

 private:
  std::variant<Coloring, HallViolator> value_;
};

/// Decides whether K_n is L-colorable. On failure the violator S is the set of
/// vertices reachable by alternating paths from unmatched vertices, so
/// |S| - |N(S)| = n - (maximum matching size).
ColorabilityResult colorable(const ListAssignment& l);

struct ValidityReport {
  enum class Issue { None, ListSize, ColorOutOfRange, UnsortedList, Overlap };
  Issue issue = Issue::None;
  std::optional<std::uint32_t> vertex;
  std::optional<std::uint32_t> other_vertex;
  std::uint32_t observed = 0;  // offending list size, color, or overlap

  bool valid() const noexcept { return issue == Issue::None; }
};

/// Checks |L(v)| = k for all v and |L(u) & L(v)| <= c for all u != v,
/// reporting the first offending vertex (in id order) before the first
/// offending pair (in lexicographic order).
ValidityReport validate_assignment(const ListAssignment& l, std::uint32_t k, std::uint32_t c);

/// True iff f is a proper L-coloring of K_n.
bool verify_coloring(const ListAssignment& l, std::span<const Color> f);

/// True iff S is a set of valid vertices, N is exactly its neighborhood and
/// |N| < |S|.
bool verify_violator(const ListAssignment& l, const HallViolator& v);

/// |A & B| for ascending vectors.
std::uint32_t overlap_size(std::span<const Color> a, std::span<const Color> b) noexcept;

}  // namespace choosability
