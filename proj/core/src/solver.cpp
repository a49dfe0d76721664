#include "choosability/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "choosability/error.hpp"

namespace choosability {

std::vector<std::uint32_t> VertexColorGraph::right_degrees() const {
  std::vector<std::uint32_t> deg(n_right, 0);
  for (const auto& colors : adjacency) {
    for (auto a : colors) ++deg[a];
  }
  return deg;
}

VertexColorGraph build_adjacency(const ListAssignment& l) {
  VertexColorGraph g;
  g.n_left = static_cast<std::uint32_t>(l.n());
  g.n_right = l.num_colors;
  g.adjacency.reserve(l.n());
  for (std::size_t v = 0; v < l.n(); ++v) {
    auto colors = l.lists[v];
    for (auto a : colors) {
      if (a >= l.num_colors) {
        throw Error(Errc::ColorOutOfRange, "vertex " + std::to_string(v) + " lists color " + std::to_string(a) +
                                               " but num_colors is " + std::to_string(l.num_colors));
      }
    }
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    g.adjacency.push_back(std::move(colors));
  }
  return g;
}

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const VertexColorGraph& g)
      : g_(g), dist_(g.n_left), next_(g.n_left) {
    m_.mate_left.assign(g.n_left, kUnmatched);
    m_.mate_right.assign(g.n_right, kUnmatched);
  }

  Matching run() {
    while (layer()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::uint32_t u = 0; u < g_.n_left; ++u) {
        if (m_.mate_left[u] == kUnmatched && augment(u)) ++m_.size;
      }
    }
    return std::move(m_);
  }

 private:
  // BFS layering from all free left vertices; true if some free color is reachable.
  bool layer() {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < g_.n_left; ++u) {
      if (m_.mate_left[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool reached_free = false;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto a : g_.adjacency[u]) {
        const auto w = m_.mate_right[a];
        if (w == kUnmatched) {
          reached_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reached_free;
  }

  // Iterative layered DFS; stack_[i] currently points at color adjacency[stack_[i]][next_[...]].
  bool augment(std::uint32_t root) {
    stack_.assign(1, root);
    while (!stack_.empty()) {
      const auto u = stack_.back();
      const auto& adj = g_.adjacency[u];
      if (next_[u] == adj.size()) {
        dist_[u] = kInf;
        stack_.pop_back();
        continue;
      }
      const auto a = adj[next_[u]];
      const auto w = m_.mate_right[a];
      if (w == kUnmatched) {
        for (auto v : stack_) {
          const auto color = g_.adjacency[v][next_[v]];
          m_.mate_left[v] = color;
          m_.mate_right[color] = v;
        }
        return true;
      }
      if (dist_[w] != kInf && dist_[w] == dist_[u] + 1) {
        stack_.push_back(w);
      } else {
        ++next_[u];
      }
    }
    return false;
  }

  const VertexColorGraph& g_;
  Matching m_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> next_;
  std::vector<std::uint32_t> stack_;
};

std::vector<Color> neighborhood_of(const ListAssignment& l, std::span<const std::uint32_t> vertices) {
  std::vector<Color> n;
  for (auto v : vertices) n.insert(n.end(), l.lists[v].begin(), l.lists[v].end());
  std::sort(n.begin(), n.end());
  n.erase(std::unique(n.begin(), n.end()), n.end());
  return n;
}

}  // namespace

Matching max_matching(const VertexColorGraph& g) { return HopcroftKarp(g).run(); }

ColorabilityResult colorable(const ListAssignment& l) {
  const auto g = build_adjacency(l);
  const auto m = max_matching(g);
  if (m.size == g.n_left) return ColorabilityResult(Coloring(m.mate_left));

  // Alternating-path closure of the unmatched vertices. Every color reached is
  // matched (otherwise the matching would not be maximum) and leads back to S.
  std::vector<char> in_s(g.n_left, 0);
  std::vector<char> in_n(g.n_right, 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < g.n_left; ++u) {
    if (m.mate_left[u] == kUnmatched) {
      in_s[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto a : g.adjacency[u]) {
      if (in_n[a]) continue;
      in_n[a] = 1;
      const auto w = m.mate_right[a];
      if (w != kUnmatched && !in_s[w]) {
        in_s[w] = 1;
        queue.push_back(w);
      }
    }
  }
  HallViolator violator;
  for (std::uint32_t u = 0; u < g.n_left; ++u) {
    if (in_s[u]) violator.vertices.push_back(u);
  }
  for (std::uint32_t a = 0; a < g.n_right; ++a) {
    if (in_n[a]) violator.neighborhood.push_back(a);
  }
  if (!verify_violator(l, violator)) throw std::logic_error("Hall violator failed its recount");
  return ColorabilityResult(std::move(violator));
}

std::uint32_t overlap_size(std::span<const Color> a, std::span<const Color> b) noexcept {
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

ValidityReport validate_assignment(const ListAssignment& l, std::uint32_t k, std::uint32_t c) {
  using Issue = ValidityReport::Issue;
  const auto n = static_cast<std::uint32_t>(l.n());
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& list = l.lists[v];
    if (list.size() != k) return {Issue::ListSize, v, std::nullopt, static_cast<std::uint32_t>(list.size())};
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= l.num_colors) return {Issue::ColorOutOfRange, v, std::nullopt, list[i]};
      if (i > 0 && list[i] <= list[i - 1]) return {Issue::UnsortedList, v, std::nullopt, list[i]};
    }
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const auto shared = overlap_size(l.lists[u], l.lists[v]);
      if (shared > c) return {Issue::Overlap, u, v, shared};
    }
  }
  return {};
}

bool verify_coloring(const ListAssignment& l, std::span<const Color> f) {
  if (f.size() != l.n()) return false;
  std::vector<Color> used(f.begin(), f.end());
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;
  for (std::size_t v = 0; v < l.n(); ++v) {
    const auto& list = l.lists[v];
    if (std::find(list.begin(), list.end(), f[v]) == list.end()) return false;
  }
  return true;
}

bool verify_violator(const ListAssignment& l, const HallViolator& v) {
  if (!std::is_sorted(v.vertices.begin(), v.vertices.end())) return false;
  if (std::adjacent_find(v.vertices.begin(), v.vertices.end()) != v.vertices.end()) return false;
  for (auto u : v.vertices) {
    if (u >= l.n()) return false;
  }
  return neighborhood_of(l, v.vertices) == v.neighborhood && v.neighborhood.size() < v.vertices.size();
}

}  // namespace choosability
