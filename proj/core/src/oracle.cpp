#include "choosability/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "choosability/error.hpp"
#include "choosability/solver.hpp"

namespace choosability {

SmallGraph::SmallGraph(std::uint32_t n) : n_(n), adj_(n, 0) {
  if (n > kMaxVertices) {
    throw Error(Errc::SearchTooLarge, "small graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}

SmallGraph SmallGraph::complete(std::uint32_t n) {
  SmallGraph g(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SmallGraph SmallGraph::path(std::uint32_t n) {
  SmallGraph g(n);
  for (std::uint32_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SmallGraph SmallGraph::from_edge_mask(std::uint32_t n, std::uint64_t mask) {
  SmallGraph g(n);
  std::uint32_t bit = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void SmallGraph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw Error(Errc::InvalidArgument, "invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= 1U << v;
  adj_[v] |= 1U << u;
}

std::uint32_t SmallGraph::degree(std::uint32_t v) const noexcept {
  return static_cast<std::uint32_t>(std::popcount(adj_[v]));
}

std::uint32_t SmallGraph::max_degree() const noexcept {
  std::uint32_t best = 0;
  for (std::uint32_t v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SmallGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (std::uint32_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

SmallGraph SmallGraph::induced(std::span<const std::uint32_t> vertices) const {
  SmallGraph h(static_cast<std::uint32_t>(vertices.size()));
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    for (std::uint32_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
    }
  }
  return h;
}

namespace {

// Membership-set order: the lowest vertex where two sets differ decides, and
// the set containing it comes first.
bool mask_before(std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

void check_cap(std::uint32_t n, std::uint32_t k, std::uint32_t cap) {
  const std::uint64_t cells = static_cast<std::uint64_t>(n) * k;
  if (cells > cap) {
    throw Error(Errc::SearchTooLarge, "search refused: n*k = " + std::to_string(cells) + " exceeds the cap of " +
                                          std::to_string(cap) + " list cells");
  }
}

class CanonicalEnumerator {
 public:
  CanonicalEnumerator(const SmallGraph& g, std::uint32_t k, std::uint32_t c, const AssignmentVisitor& visit)
      : n_(g.n()), k_(k), c_(c), visit_(visit), degree_(n_, 0), pair_count_(n_ * n_, 0), pair_cap_(n_ * n_, k) {
    for (std::uint32_t u = 0; u < n_; ++u) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        if (g.adjacent(u, v)) pair_cap_[u * n_ + v] = c;
      }
    }
    candidates_.resize(n_);
    for (std::uint32_t j = 0; j < n_; ++j) {
      const std::uint32_t above = n_ - 1 - j;
      auto& cand = candidates_[j];
      cand.reserve(std::size_t{1} << above);
      for (std::uint32_t rest = 0; rest < (1U << above); ++rest) cand.push_back((1U << j) | (rest << (j + 1)));
      std::sort(cand.begin(), cand.end(), mask_before);
    }
  }

  std::uint64_t run() {
    if (k_ == 0) {
      emit();
    } else {
      descend(0, 0);
    }
    return visited_;
  }

 private:
  // Colors are added in canonical order: all colors whose lowest member is
  // vertex j, as a non-increasing run of candidates, before moving to j+1.
  void descend(std::uint32_t j, std::size_t start) {
    while (j < n_ && degree_[j] == k_) {
      ++j;
      start = 0;
    }
    if (j == n_) {
      emit();
      return;
    }
    const auto& cand = candidates_[j];
    for (std::size_t idx = start; idx < cand.size() && !stopped_; ++idx) {
      const std::uint32_t mask = cand[idx];
      if (!feasible(mask)) continue;
      apply(mask, +1);
      chosen_.push_back(mask);
      descend(j, idx);
      chosen_.pop_back();
      apply(mask, -1);
    }
  }

  bool feasible(std::uint32_t mask) const {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::uint32_t>(std::countr_zero(rest));
      if (degree_[u] >= k_) return false;
      for (std::uint32_t others = rest & (rest - 1); others != 0; others &= others - 1) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(others));
        if (pair_count_[u * n_ + v] >= pair_cap_[u * n_ + v]) return false;
      }
    }
    return true;
  }

  void apply(std::uint32_t mask, int delta) {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::uint32_t>(std::countr_zero(rest));
      degree_[u] += delta;
      for (std::uint32_t others = rest & (rest - 1); others != 0; others &= others - 1) {
        const auto v = static_cast<std::uint32_t>(std::countr_zero(others));
        pair_count_[u * n_ + v] += delta;
      }
    }
  }

  void emit() {
    ListAssignment l;
    l.k = k_;
    l.c = c_;
    l.num_colors = static_cast<std::uint32_t>(chosen_.size());
    l.lists.assign(n_, {});
    for (std::uint32_t color = 0; color < chosen_.size(); ++color) {
      for (std::uint32_t rest = chosen_[color]; rest != 0; rest &= rest - 1) {
        l.lists[std::countr_zero(rest)].push_back(color);
      }
    }
    ++visited_;
    if (!visit_(l)) stopped_ = true;
  }

  std::uint32_t n_;
  std::uint32_t k_;
  std::uint32_t c_;
  const AssignmentVisitor& visit_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> pair_count_;  // indexed u*n+v with u < v
  std::vector<std::uint32_t> pair_cap_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> chosen_;
  std::uint64_t visited_ = 0;
  bool stopped_ = false;
};

using Decider = std::function<bool(const ListAssignment&)>;

ExactResult exact_chi(const SmallGraph& g, std::uint32_t c, std::uint32_t cap, const Decider& decide) {
  ExactResult result;
  result.n = g.n();
  result.c = c;
  if (g.n() == 0) return result;
  // Greedy coloring succeeds from lists of size max_degree + 1.
  const std::uint32_t always_enough = g.max_degree() + 1;
  for (std::uint32_t k = 1;; ++k) {
    if (k >= always_enough) {
      result.chi_l = k;
      return result;
    }
    check_cap(g.n(), k, cap);
    std::optional<ListAssignment> defeat;
    result.assignments_checked += enumerate_canonical_assignments(
        g, k, c,
        [&](const ListAssignment& l) {
          if (decide(l)) return true;
          defeat = l;
          return false;
        },
        cap);
    if (!defeat) {
      result.chi_l = k;
      return result;
    }
    result.defeated_by = std::move(defeat);
  }
}

}  // namespace

std::uint64_t enumerate_canonical_assignments(const SmallGraph& g, std::uint32_t k, std::uint32_t c,
                                              const AssignmentVisitor& visit, std::uint32_t cap) {
  check_cap(g.n(), k, cap);
  return CanonicalEnumerator(g, k, c, visit).run();
}

std::uint64_t enumerate_canonical_assignments(std::uint32_t n, std::uint32_t k, std::uint32_t c,
                                              const AssignmentVisitor& visit, std::uint32_t cap) {
  check_cap(n, k, cap);
  return enumerate_canonical_assignments(SmallGraph::complete(n), k, c, visit, cap);
}

ListAssignment canonicalize(const ListAssignment& l) {
  if (l.n() > 32) throw Error(Errc::InvalidArgument, "canonicalize supports at most 32 vertices");
  std::vector<std::uint32_t> members(l.num_colors, 0);
  for (std::uint32_t v = 0; v < l.n(); ++v) {
    for (auto color : l.lists[v]) {
      if (color >= l.num_colors) throw Error(Errc::ColorOutOfRange, "color outside the universe");
      members[color] |= 1U << v;
    }
  }
  std::vector<std::uint32_t> used;
  for (auto m : members) {
    if (m != 0) used.push_back(m);
  }
  std::stable_sort(used.begin(), used.end(), mask_before);
  ListAssignment out;
  out.k = l.k;
  out.c = l.c;
  out.num_colors = static_cast<std::uint32_t>(used.size());
  out.lists.assign(l.n(), {});
  for (std::uint32_t color = 0; color < used.size(); ++color) {
    for (std::uint32_t rest = used[color]; rest != 0; rest &= rest - 1) {
      out.lists[std::countr_zero(rest)].push_back(color);
    }
  }
  return out;
}

bool list_colorable_graph(const SmallGraph& g, const ListAssignment& l) {
  if (l.n() != g.n()) throw Error(Errc::InvalidArgument, "assignment and graph sizes differ");
  const std::uint32_t n = g.n();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&g](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });
  constexpr Color kNone = ~Color{0};
  std::vector<Color> color(n, kNone);

  const std::function<bool(std::uint32_t)> place = [&](std::uint32_t pos) -> bool {
    if (pos == n) return true;
    const auto v = order[pos];
    for (auto candidate : l.lists[v]) {
      bool clash = false;
      for (std::uint32_t rest = g.neighbors(v); rest != 0 && !clash; rest &= rest - 1) {
        clash = color[std::countr_zero(rest)] == candidate;
      }
      if (clash) continue;
      color[v] = candidate;
      if (place(pos + 1)) return true;
      color[v] = kNone;
    }
    return false;
  };
  return place(0);
}

ExactResult exact_chi_l_complete(std::uint32_t n, std::uint32_t c, std::uint32_t cap) {
  return exact_chi(SmallGraph::complete(n), c, cap,
                   [](const ListAssignment& l) { return colorable(l).colorable(); });
}

ExactResult exact_chi_l_graph(const SmallGraph& g, std::uint32_t c, std::uint32_t cap) {
  return exact_chi(g, c, cap, [&g](const ListAssignment& l) { return list_colorable_graph(g, l); });
}

ProbeReport conjecture_probe(std::uint32_t n_max, std::uint32_t c, std::uint32_t k_cap, std::uint32_t cap) {
  if (n_max > kMaxProbeVertices) {
    throw Error(Errc::SearchTooLarge, "probe refused: n_max = " + std::to_string(n_max) + " exceeds the cap of " +
                                          std::to_string(kMaxProbeVertices) + " vertices");
  }
  ProbeReport report;
  report.n_max = n_max;
  report.c = c;
  report.k_cap = k_cap;
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    ProbeLevel level;
    level.n = n;
    level.chi_complete = exact_chi_l_complete(n, c, cap).chi_l;
    if (level.chi_complete > k_cap) {
      throw Error(Errc::SearchTooLarge, "probe refused: chi_l(K_" + std::to_string(n) + ", c) = " +
                                            std::to_string(level.chi_complete) + " exceeds k_cap = " +
                                            std::to_string(k_cap));
    }
    const std::uint32_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const auto g = SmallGraph::from_edge_mask(n, mask);
      ++level.graphs_checked;
      if (g.max_degree() + 1 <= level.chi_complete) continue;
      level.assignments_checked += enumerate_canonical_assignments(
          g, level.chi_complete, c,
          [&](const ListAssignment& l) {
            if (list_colorable_graph(g, l)) return true;
            report.counterexample = Counterexample{g, l};
            return false;
          },
          cap);
      if (report.counterexample) break;
    }
    report.levels.push_back(level);
    if (report.counterexample) break;
  }
  return report;
}

}  // namespace choosability
