#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace test_support {

/// Greedy rejection sampling of `count` distinct sets with sizes in [lo, hi]
/// that pairwise share at most `cap` elements. Starts from a universe of size
/// `universe` and grows it on repeated failure. Empty result if nothing fits.
inline std::vector<std::set<int>> sample_family(std::mt19937& rng, int count, int lo, int hi, int cap, int universe) {
  std::uniform_int_distribution<int> size_pick(lo, hi);
  for (int restart = 0; restart < 50; ++restart) {
    std::vector<std::set<int>> family;
    std::vector<int> pool(universe);
    std::iota(pool.begin(), pool.end(), 0);
    int attempts = 0;
    while (static_cast<int>(family.size()) < count && attempts < 500) {
      ++attempts;
      std::shuffle(pool.begin(), pool.end(), rng);
      const int size = std::min(size_pick(rng), universe);
      std::set<int> s(pool.begin(), pool.begin() + size);
      bool ok = static_cast<int>(s.size()) >= lo;
      for (const auto& t : family) {
        if (!ok) break;
        int shared = 0;
        for (int x : s) shared += t.count(x) ? 1 : 0;
        ok = shared <= cap && s != t;
      }
      if (ok) family.push_back(std::move(s));
    }
    if (static_cast<int>(family.size()) == count) return family;
    ++universe;
  }
  return {};
}

inline std::size_t union_size(const std::vector<std::set<int>>& family) {
  std::set<int> all;
  for (const auto& s : family) all.insert(s.begin(), s.end());
  return all.size();
}

}  // namespace test_support
