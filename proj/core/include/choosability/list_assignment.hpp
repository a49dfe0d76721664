#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace choosability {

using Color = std::uint32_t;

/// Color lists for the vertices 0..n-1 of a graph, over the color universe
/// [0, num_colors). k and c are the claimed (k,c) parameters; whether the
/// lists actually honour them is checked by validate_assignment().
///
/// Lists are kept as strictly increasing vectors.
struct ListAssignment {
  std::uint32_t k = 0;
  std::uint32_t c = 0;
  std::uint32_t num_colors = 0;
  std::vector<std::vector<Color>> lists;

  std::size_t n() const noexcept { return lists.size(); }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

}  // namespace choosability
