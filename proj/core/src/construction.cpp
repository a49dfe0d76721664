#include "choosability/construction.hpp"

#include <algorithm>
#include <string>

#include "choosability/error.hpp"

namespace choosability {

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ClassSpace::ClassSpace(FiniteField field, std::uint32_t c)
    : field_(std::move(field)), c_(c), subgroup_(field_.subgroup(c)) {
  const std::uint32_t q = field_.size();
  const std::uint64_t expected = (static_cast<std::uint64_t>(q) * q - 1) / c;
  classes_.reserve(expected);
  rep_keys_.reserve(expected);
  // Pairs are visited in lexicographic order, so the orbit minima come out
  // already sorted.
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = (a == 0 ? 1U : 0U); b < q; ++b) {
      const FieldElement fa{a};
      const FieldElement fb{b};
      const std::uint64_t key = pair_key(fa, fb);
      bool minimal = true;
      for (std::size_t i = 1; i < subgroup_.size() && minimal; ++i) {
        const auto h = subgroup_[i];
        minimal = pair_key(field_.mul(h, fa), field_.mul(h, fb)) > key;
      }
      if (!minimal) continue;
      classes_.push_back({fa, fb, static_cast<std::uint32_t>(classes_.size())});
      rep_keys_.push_back(key);
    }
  }
}

std::uint32_t ClassSpace::class_id(FieldElement a, FieldElement b) const {
  if (a.index == 0 && b.index == 0) throw Error(Errc::ZeroPair, "(0,0) belongs to no class");
  std::uint64_t best = pair_key(a, b);
  for (std::size_t i = 1; i < subgroup_.size(); ++i) {
    const auto h = subgroup_[i];
    best = std::min(best, pair_key(field_.mul(h, a), field_.mul(h, b)));
  }
  const auto it = std::lower_bound(rep_keys_.begin(), rep_keys_.end(), best);
  return static_cast<std::uint32_t>(it - rep_keys_.begin());
}

const ProjClass& ClassSpace::class_of(FieldElement a, FieldElement b) const {
  return classes_[class_id(a, b)];
}

std::vector<std::uint32_t> ClassSpace::list_of_class(std::uint32_t id) const {
  const ProjClass& cls = classes_.at(id);
  const std::uint32_t q = field_.size();
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(q) * c_);
  // Solve a x + b y = h for every h in H, parametrised by the coordinate
  // whose coefficient is nonzero.
  const bool solve_for_y = cls.b.index != 0;
  const FieldElement pivot_inv = field_.inv(solve_for_y ? cls.b : cls.a);
  const FieldElement other = solve_for_y ? cls.a : cls.b;
  for (std::uint32_t t = 0; t < q; ++t) {
    const FieldElement free{t};
    const FieldElement partial = field_.mul(other, free);
    for (const auto h : subgroup_) {
      const FieldElement solved = field_.mul(field_.sub(h, partial), pivot_inv);
      out.push_back(solve_for_y ? class_id(free, solved) : class_id(solved, free));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<std::uint32_t> ClassSpace::origin_line(FieldElement slope) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 1; x < field_.size(); ++x) {
    const FieldElement fx{x};
    out.push_back(class_id(fx, field_.mul(slope, fx)));
  }
  sort_unique(out);
  return out;
}

Hypergraph furedi_hypergraph(std::uint64_t q, std::uint32_t c) {
  const ClassSpace space(FiniteField(q), c);
  Hypergraph h;
  h.n_vertices = space.size();
  h.uniformity = static_cast<std::uint32_t>(q);
  h.intersection_cap = c;
  h.edges.reserve(space.size());
  for (std::uint32_t id = 0; id < space.size(); ++id) h.edges.push_back(space.list_of_class(id));
  return h;
}

void require_admissible(std::uint64_t q, std::uint64_t c) {
  if (!as_prime_power(q)) {
    throw Error(Errc::NotPrimePower, "q = " + std::to_string(q) + " is not a prime power");
  }
  const std::string params = " (q=" + std::to_string(q) + ", c=" + std::to_string(c) + ")";
  if (c == 0 || (q - 1) % c != 0) {
    throw Error(Errc::AdmissibilityViolated, "c divides q-1 violated" + params);
  }
  if (c >= q - 1) throw Error(Errc::AdmissibilityViolated, "c < q-1 violated" + params);
}

Hypergraph augmented_hypergraph(std::uint64_t q, std::uint32_t c) {
  require_admissible(q, c);
  const ClassSpace space(FiniteField(q), c);
  Hypergraph h;
  const std::uint32_t extra = space.size();
  h.n_vertices = extra + 1;
  h.uniformity = static_cast<std::uint32_t>(q);
  h.intersection_cap = c;
  h.edges.reserve(space.size() + 2);
  for (std::uint32_t id = 0; id < space.size(); ++id) h.edges.push_back(space.list_of_class(id));
  // 2c <= q-1 because c | q-1 and c < q-1.
  for (std::uint32_t bundle = 0; bundle < 2; ++bundle) {
    std::vector<std::uint32_t> edge;
    for (std::uint32_t s = bundle * c; s < (bundle + 1) * c; ++s) {
      const auto line = space.origin_line(space.field().element(s));
      edge.insert(edge.end(), line.begin(), line.end());
    }
    edge.push_back(extra);
    sort_unique(edge);
    h.edges.push_back(std::move(edge));
  }
  return h;
}

ListAssignment hard_instance(std::uint64_t q, std::uint32_t c) {
  Hypergraph h = augmented_hypergraph(q, c);
  ListAssignment l;
  l.k = static_cast<std::uint32_t>(q);
  l.c = c;
  l.num_colors = h.n_vertices;
  l.lists = std::move(h.edges);
  return l;
}

bool DesignReport::intersection_dichotomy() const {
  return std::all_of(intersection_histogram.begin(), intersection_histogram.end(),
                     [this](const auto& kv) { return kv.first == 0 || kv.first == intersection_cap; });
}

bool DesignReport::regular(std::uint32_t degree) const {
  return degree_histogram.size() == 1 && degree_histogram.begin()->first == degree;
}

DesignReport verify_design(const Hypergraph& h, std::uint64_t q, std::uint32_t c) {
  DesignReport r;
  r.n_vertices = h.n_vertices;
  r.n_edges = static_cast<std::uint32_t>(h.edges.size());
  r.expected_uniformity = static_cast<std::uint32_t>(q);
  r.intersection_cap = c;

  // Cleaned copies: in-range, deduplicated, sorted.
  std::vector<std::vector<std::uint32_t>> clean(h.edges.size());
  std::vector<std::vector<std::uint32_t>> incident(h.n_vertices);
  bool same_size = true;
  for (std::uint32_t e = 0; e < r.n_edges; ++e) {
    const auto& edge = h.edges[e];
    if (edge.size() != h.edges.front().size()) same_size = false;
    if (edge.size() != q) {
      r.violations.push_back({DesignViolation::Kind::EdgeSize, e, std::nullopt, std::nullopt,
                              static_cast<std::uint32_t>(edge.size())});
    }
    auto& out = clean[e];
    for (auto v : edge) {
      if (v >= h.n_vertices) {
        r.violations.push_back({DesignViolation::Kind::VertexOutOfRange, e, std::nullopt, v, v});
        continue;
      }
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i] == out[i - 1]) {
        r.violations.push_back({DesignViolation::Kind::RepeatedVertex, e, std::nullopt, out[i], 2});
      }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (auto v : out) incident[v].push_back(e);
  }
  if (same_size && !h.edges.empty()) r.uniformity = static_cast<std::uint32_t>(h.edges.front().size());

  for (const auto& edges_at_v : incident) ++r.degree_histogram[static_cast<std::uint32_t>(edges_at_v.size())];

  // Pairwise intersections through the vertex incidence lists.
  std::vector<std::uint32_t> overlap(h.edges.size(), 0);
  std::vector<std::uint32_t> touched;
  std::uint64_t nonzero_pairs = 0;
  for (std::uint32_t e = 0; e < r.n_edges; ++e) {
    touched.clear();
    for (auto v : clean[e]) {
      for (auto f : incident[v]) {
        if (f <= e) continue;
        if (overlap[f]++ == 0) touched.push_back(f);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto f : touched) {
      const auto size = overlap[f];
      overlap[f] = 0;
      ++r.intersection_histogram[size];
      ++nonzero_pairs;
      r.max_intersection = std::max(r.max_intersection, size);
      if (size > c) r.violations.push_back({DesignViolation::Kind::Intersection, e, f, std::nullopt, size});
    }
  }
  const std::uint64_t all_pairs = static_cast<std::uint64_t>(r.n_edges) * (r.n_edges > 0 ? r.n_edges - 1 : 0) / 2;
  if (all_pairs > nonzero_pairs) r.intersection_histogram[0] = all_pairs - nonzero_pairs;

  if (r.n_edges == r.n_vertices) {
    bool symmetric = true;
    for (std::uint32_t e = 0; e < r.n_edges && symmetric; ++e) {
      for (auto v : clean[e]) {
        if (!std::binary_search(clean[v].begin(), clean[v].end(), e)) {
          symmetric = false;
          break;
        }
      }
    }
    r.incidence_symmetric = symmetric;
  }
  return r;
}

}  // namespace choosability
