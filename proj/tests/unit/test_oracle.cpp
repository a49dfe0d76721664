#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "choosability/error.hpp"
#include "choosability/oracle.hpp"
#include "choosability/solver.hpp"

namespace cz = choosability;
using cz::SmallGraph;

namespace {

// All k-subsets of {0..universe-1}, as ascending vectors.
std::vector<std::vector<cz::Color>> subsets(std::uint32_t universe, std::uint32_t k) {
  std::vector<std::vector<cz::Color>> out;
  std::vector<cz::Color> cur;
  auto rec = [&](auto&& self, cz::Color start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (cz::Color x = start; x < universe; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Orbit signature under color renaming: the sorted multiset of per-color vertex masks.
std::vector<std::uint32_t> signature(const std::vector<std::vector<cz::Color>>& lists, std::uint32_t universe) {
  std::vector<std::uint32_t> mask(universe, 0);
  for (std::uint32_t v = 0; v < lists.size(); ++v) {
    for (auto col : lists[v]) mask[col] |= 1U << v;
  }
  std::vector<std::uint32_t> sig;
  for (auto m : mask) {
    if (m != 0) sig.push_back(m);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Unpruned reference: every tuple of k-subsets of an n*k color universe, filtered
// by the overlap cap on edges, counted up to color renaming.
std::uint64_t reference_orbit_count(const SmallGraph& g, std::uint32_t k, std::uint32_t c) {
  const std::uint32_t n = g.n();
  const std::uint32_t universe = n * k;
  const auto pool = subsets(universe, k);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<cz::Color>> lists(n);
  auto rec = [&](auto&& self, std::uint32_t v) -> void {
    if (v == n) {
      seen.insert(signature(lists, universe));
      return;
    }
    for (const auto& s : pool) {
      bool ok = true;
      for (std::uint32_t u = 0; u < v && ok; ++u) {
        if (g.adjacent(u, v) && cz::overlap_size(lists[u], s) > c) ok = false;
      }
      if (!ok) continue;
      lists[v] = s;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return seen.size();
}

// Exhaustive choice of one color per vertex.
bool brute_force_colorable(const SmallGraph& g, const cz::ListAssignment& l) {
  std::vector<cz::Color> pick(l.n());
  auto rec = [&](auto&& self, std::uint32_t v) -> bool {
    if (v == l.n()) return true;
    for (auto col : l.lists[v]) {
      bool ok = true;
      for (std::uint32_t u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && pick[u] == col);
      if (!ok) continue;
      pick[v] = col;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<cz::ListAssignment> collect(const SmallGraph& g, std::uint32_t k, std::uint32_t c) {
  std::vector<cz::ListAssignment> out;
  cz::enumerate_canonical_assignments(g, k, c, [&](const cz::ListAssignment& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

}  // namespace

TEST(SmallGraph, Basics) {
  const auto k4 = SmallGraph::complete(4);
  EXPECT_EQ(k4.edges().size(), 6U);
  EXPECT_EQ(k4.max_degree(), 3U);
  EXPECT_EQ(SmallGraph::edgeless(3).edges().size(), 0U);
  const auto p3 = SmallGraph::path(3);
  EXPECT_TRUE(p3.adjacent(0, 1));
  EXPECT_TRUE(p3.adjacent(1, 2));
  EXPECT_FALSE(p3.adjacent(0, 2));
  EXPECT_EQ(SmallGraph::from_edge_mask(4, 0b111111), k4);
  const auto g = SmallGraph::from_edge_mask(3, 0b100);  // third pair is (1,2)
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(g.edges().size(), 1U);
  const std::vector<std::uint32_t> keep{2, 0};
  EXPECT_EQ(p3.induced(keep), SmallGraph::edgeless(2));
  try {
    SmallGraph too_big(17);
    FAIL();
  } catch (const cz::Error& e) {
    EXPECT_EQ(e.code(), cz::Errc::SearchTooLarge);
  }
}

TEST(Enumeration, SmallExamples) {
  const auto a = collect(SmallGraph::complete(2), 1, 1);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0].lists, (std::vector<std::vector<cz::Color>>{{0}, {0}}));
  EXPECT_EQ(a[1].lists, (std::vector<std::vector<cz::Color>>{{0}, {1}}));

  const auto b = collect(SmallGraph::complete(2), 1, 0);
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(b[0].lists, (std::vector<std::vector<cz::Color>>{{0}, {1}}));
}

TEST(Enumeration, CountsMatchUnprunedReference) {
  struct Case {
    SmallGraph g;
    std::uint32_t k;
    std::uint32_t c;
  };
  const std::vector<Case> cases{
      {SmallGraph::complete(3), 2, 1}, {SmallGraph::complete(3), 2, 0}, {SmallGraph::complete(3), 2, 2},
      {SmallGraph::complete(2), 3, 1}, {SmallGraph::complete(4), 1, 0}, {SmallGraph::complete(4), 2, 1},
      {SmallGraph::complete(3), 3, 1}, {SmallGraph::path(3), 2, 0},     {SmallGraph::path(3), 2, 1},
      {SmallGraph::edgeless(3), 2, 0}, {SmallGraph::path(4), 2, 0},     {SmallGraph::from_edge_mask(4, 0b100001), 2, 1},
  };
  for (const auto& [g, k, c] : cases) {
    const auto got = collect(g, k, c).size();
    EXPECT_EQ(got, reference_orbit_count(g, k, c)) << "n=" << g.n() << " k=" << k << " c=" << c;
  }
}

TEST(Enumeration, EmittedAssignmentsAreValidAndDistinct) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        std::set<std::vector<std::uint32_t>> sigs;
        for (const auto& l : collect(SmallGraph::complete(n), k, c)) {
          EXPECT_TRUE(cz::validate_assignment(l, k, c).valid());
          EXPECT_TRUE(sigs.insert(signature(l.lists, l.num_colors)).second) << "duplicate orbit";
        }
      }
    }
  }
}

TEST(Enumeration, CanonicityIsStableUnderRenaming) {
  std::mt19937 rng(17);
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        for (const auto& l : collect(SmallGraph::complete(n), k, c)) {
          ASSERT_EQ(cz::canonicalize(l), l);
          // Rename into a larger universe with a random injection.
          std::vector<cz::Color> image(l.num_colors + 5);
          std::iota(image.begin(), image.end(), 0);
          std::shuffle(image.begin(), image.end(), rng);
          cz::ListAssignment renamed{l.k, l.c, static_cast<std::uint32_t>(image.size()), {}};
          for (const auto& list : l.lists) {
            std::vector<cz::Color> out;
            for (auto col : list) out.push_back(image[col]);
            std::sort(out.begin(), out.end());
            renamed.lists.push_back(out);
          }
          ASSERT_EQ(cz::canonicalize(renamed), l);
        }
      }
    }
  }
}

TEST(Enumeration, RefusesOversizedSearches) {
  try {
    cz::enumerate_canonical_assignments(6, 3, 1, [](const cz::ListAssignment&) { return true; });
    FAIL();
  } catch (const cz::Error& e) {
    EXPECT_EQ(e.code(), cz::Errc::SearchTooLarge);
    EXPECT_NE(std::string(e.what()).find(std::to_string(cz::kDefaultSearchCap)), std::string::npos);
  }
  EXPECT_NO_THROW(cz::enumerate_canonical_assignments(6, 3, 1, [](const cz::ListAssignment&) { return false; }, 18));
}

TEST(Backtracking, Examples) {
  EXPECT_TRUE(cz::list_colorable_graph(SmallGraph::edgeless(3), {1, 1, 1, {{0}, {0}, {0}}}));
  EXPECT_FALSE(cz::list_colorable_graph(SmallGraph::complete(2), {1, 1, 1, {{0}, {0}}}));
  EXPECT_TRUE(cz::list_colorable_graph(SmallGraph::path(3), {1, 1, 2, {{0}, {1}, {0}}}));
}

TEST(Backtracking, AgreesWithBruteForceOnAllGraphs) {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    const std::uint64_t graphs = 1ULL << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      const auto g = SmallGraph::from_edge_mask(n, mask);
      for (const auto& l : collect(g, 2, 1)) {
        ASSERT_EQ(cz::list_colorable_graph(g, l), brute_force_colorable(g, l));
      }
    }
  }
}

TEST(Oracle, SolverAgreesWithBacktrackingOnCompleteGraphs) {
  std::uint64_t checked = 0;
  std::uint64_t disagreements = 0;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto g = SmallGraph::complete(n);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (std::uint32_t c = 0; c <= 2; ++c) {
        for (const auto& l : collect(g, k, c)) {
          ++checked;
          if (cz::colorable(l).colorable() != cz::list_colorable_graph(g, l)) ++disagreements;
        }
      }
    }
  }
  EXPECT_GT(checked, 0U);
  EXPECT_EQ(disagreements, 0U);
}

TEST(Oracle, ExactValuesOnCompleteGraphs) {
  EXPECT_EQ(cz::exact_chi_l_complete(2, 1).chi_l, 2U);
  EXPECT_EQ(cz::exact_chi_l_complete(3, 1).chi_l, 2U);
  EXPECT_EQ(cz::exact_chi_l_complete(4, 1).chi_l, 2U);
  EXPECT_EQ(cz::exact_chi_l_complete(5, 1).chi_l, 3U);
  EXPECT_EQ(cz::exact_chi_l_complete(3, 2).chi_l, 3U);
  EXPECT_EQ(cz::exact_chi_l_complete(1, 1).chi_l, 1U);

  const auto r = cz::exact_chi_l_complete(2, 1);
  ASSERT_TRUE(r.defeated_by.has_value());
  EXPECT_EQ(r.defeated_by->lists, (std::vector<std::vector<cz::Color>>{{0}, {0}}));
  EXPECT_FALSE(cz::colorable(*r.defeated_by).colorable());

  const auto five = cz::exact_chi_l_complete(5, 1);
  ASSERT_TRUE(five.defeated_by.has_value());
  EXPECT_EQ(five.defeated_by->k, 2U);
  EXPECT_TRUE(cz::validate_assignment(*five.defeated_by, 2, 1).valid());
  EXPECT_FALSE(cz::colorable(*five.defeated_by).colorable());
}

TEST(Oracle, CeilingWhenOverlapIsUnrestricted) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t c = n - 1; c <= 3; ++c) {
      if (c == 0) continue;
      EXPECT_EQ(cz::exact_chi_l_complete(n, c).chi_l, n) << n << "," << c;
    }
  }
}

TEST(Oracle, MonotoneInC) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    std::uint32_t prev = 0;
    for (std::uint32_t c = 0; c <= 3; ++c) {
      const auto v = cz::exact_chi_l_complete(n, c).chi_l;
      EXPECT_GE(v, prev) << n << "," << c;
      prev = v;
    }
  }
}

TEST(Oracle, GraphExamples) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(cz::exact_chi_l_graph(SmallGraph::complete(n), 1).chi_l, cz::exact_chi_l_complete(n, 1).chi_l);
    EXPECT_EQ(cz::exact_chi_l_graph(SmallGraph::edgeless(n), 1).chi_l, 1U);
  }
  EXPECT_EQ(cz::exact_chi_l_graph(SmallGraph::path(3), 1).chi_l, 2U);
}

TEST(Oracle, InducedSubgraphMonotonicity) {
  for (std::uint32_t c = 1; c <= 2; ++c) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      const std::uint64_t graphs = 1ULL << (n * (n - 1) / 2);
      for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        const auto g = SmallGraph::from_edge_mask(n, mask);
        const auto chi_g = cz::exact_chi_l_graph(g, c).chi_l;
        for (std::uint32_t keep = 1; keep < (1U << n); ++keep) {
          std::vector<std::uint32_t> vs;
          for (std::uint32_t v = 0; v < n; ++v) {
            if (keep >> v & 1U) vs.push_back(v);
          }
          ASSERT_LE(cz::exact_chi_l_graph(g.induced(vs), c).chi_l, chi_g) << "mask=" << mask << " keep=" << keep;
        }
      }
    }
  }
}

TEST(Probe, NoCounterexampleAtDeskScale) {
  const auto small = cz::conjecture_probe(2, 1, 2);
  EXPECT_FALSE(small.counterexample.has_value());
  ASSERT_EQ(small.levels.size(), 2U);
  EXPECT_EQ(small.levels[1].graphs_checked, 2U);

  const auto r = cz::conjecture_probe(4, 1, 4);
  EXPECT_FALSE(r.counterexample.has_value());
  ASSERT_EQ(r.levels.size(), 4U);
  EXPECT_EQ(r.levels[3].graphs_checked, 64U);
}

TEST(Probe, Refusals) {
  try {
    (void)cz::conjecture_probe(6, 1, 4);
    FAIL();
  } catch (const cz::Error& e) {
    EXPECT_EQ(e.code(), cz::Errc::SearchTooLarge);
  }
  try {
    (void)cz::conjecture_probe(4, 3, 3);  // chi_l(K_4, 3) = 4 > k_cap
    FAIL();
  } catch (const cz::Error& e) {
    EXPECT_EQ(e.code(), cz::Errc::SearchTooLarge);
  }
}
