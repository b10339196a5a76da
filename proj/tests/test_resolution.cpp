#include <doctest.h>

#include <numeric>
#include <random>

#include "hfk/errors.hpp"
#include "hfk/groebner.hpp"
#include "hfk/resolution.hpp"

using namespace hfk;

namespace {

const std::vector<std::string> kWords = {"b=2; 1", "b=2; 1 1 1", "b=3; 1 -2 1 -2", "b=3; 1 1 1 2",
                                         "b=3; 1 1 1 -2", "b=4; 1 -2 1 3 -2"};

// Union-find over (boundary, position) slots of the closure: a singular
// crossing glues its two strands, a smoothing keeps them apart, and the top
// boundary is identified with the bottom.
int components_by_union_find(const LayeredBraidDiagram& d, const ResolutionIndex& idx) {
  const int b = d.strands(), L = d.num_layers();
  std::vector<int> parent(L * b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  auto slot = [&](int k, int p) { return (k % L) * b + p - 1; };
  int c = 0;
  for (int k = 0; k < L; ++k) {
    const auto& layer = d.layers()[k];
    for (int p = 1; p <= b; ++p)
      if (layer.is_identity() || (p != layer.crossing && p != layer.crossing + 1))
        unite(slot(k, p), slot(k + 1, p));
    if (layer.is_identity()) continue;
    const int i = layer.crossing;
    const bool singular = (layer.sign > 0) == (idx[c] == 0);
    ++c;
    unite(slot(k, i), slot(k + 1, i));
    unite(slot(k, i + 1), slot(k + 1, i + 1));
    if (singular) unite(slot(k, i), slot(k, i + 1));
  }
  int comps = 0;
  for (int x = 0; x < L * b; ++x) comps += find(x) == x;
  return comps;
}

std::vector<ResolutionIndex> all_indices(int m) {
  std::vector<ResolutionIndex> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    ResolutionIndex idx(m);
    for (int k = 0; k < m; ++k) idx[k] = (mask >> k) & 1;
    out.push_back(idx);
  }
  return out;
}

std::vector<MultiPoly> with_local(const ResolvedGraph& g, const std::vector<Relation>& rels) {
  auto p = polys_of(local_relations(g));
  for (const auto& q : polys_of(rels)) p.push_back(q);
  for (const auto& q : polys_of(detect_closed_components(g))) p.push_back(q);
  return p;
}

MultiPoly x(std::size_t n, std::initializer_list<int> ids) {
  auto p = MultiPoly::constant(n, FieldElem::one());
  for (int i : ids) p = p * var(n, i);
  return p;
}

}  // namespace

TEST_CASE("resolution index parsing") {
  CHECK(parse_resolution("0101", 4) == ResolutionIndex{0, 1, 0, 1});
  CHECK(to_string(ResolutionIndex{1, 1, 0}) == "110");
  CHECK_THROWS_AS(parse_resolution("012", 3), UsageError);
  CHECK_THROWS_AS(parse_resolution("01", 3), UsageError);
  const auto d = build_layered_diagram(parse_braid("b=3; 1 -2 1 -2"));
  CHECK(all_singular(d) == ResolutionIndex{0, 1, 0, 1});
}

TEST_CASE("figure-8 singular resolution relations") {
  const auto d = build_layered_diagram(parse_braid("b=3; 1 -2 1 -2"));
  const ResolvedGraph g(d, all_singular(d));
  CHECK(g.num_singular() == 4);
  const auto rs = elementary_regions(g);
  CHECK(rs.regions.size() == 4);
  CHECK(coherent_regions(g, rs).size() == 5);
  const std::vector<std::string> expected = {"t^10*x3*x9 - x0*x6", "t^11*x9 - x0", "t^6*x1*x7 - x4*x10",
                                             "t^8*x1*x9 - x4*x6", "t^8*x3*x7 - x0*x10"};
  CHECK(canonical_set(nonlocal_from_regions(g)) == expected);
  CHECK(canonical_set(nonlocal_from_cycles(g)) == expected);
  CHECK(enumerate_cycles(g).size() == 5);
}

TEST_CASE("figure-8 subset examples") {
  const auto d = build_layered_diagram(parse_braid("b=3; 1 -2 1 -2"));
  const ResolvedGraph g(d, all_singular(d));
  const std::size_t n = g.num_vars();
  const std::vector<int> caption = {g.vertex_at(0, 3), g.vertex_at(1, 2), g.vertex_at(2, 1), g.vertex_at(2, 3),
                                    g.vertex_at(3, 2)};
  CHECK(subset_relation(g, caption).to_string() == "t^8*x1*x9 - x4*x6");
  const std::vector<int> lower = {g.vertex_at(0, 1), g.vertex_at(0, 3), g.vertex_at(1, 2)};
  CHECK(subset_relation(g, lower).to_string() == "t^5*x3*x7*x8 - x0*x1*x2");

  // A non-coherent subset: its relation still lies in the ideal.
  const auto polys = with_local(g, nonlocal_from_regions(g));
  const auto gb = buchberger(n, polys);
  const MultiPoly nonex = t_times(5, x(n, {3, 7, 8})) + x(n, {0, 1, 2});
  CHECK(gb.contains(nonex));
  // The outermost relation.
  CHECK(gb.contains(t_times(12, x(n, {12})) + x(n, {0})));
  CHECK_FALSE(gb.contains(t_times(11, x(n, {12})) + x(n, {0})));
}

TEST_CASE("region, cycle and subset presentations agree") {
  for (const auto& text : kWords) {
    const auto d = build_layered_diagram(parse_braid(text));
    for (const auto& idx : all_indices(d.num_crossings())) {
      const ResolvedGraph g(d, idx);
      CAPTURE(text);
      CAPTURE(to_string(idx));
      const auto regions = nonlocal_from_regions(g);
      CHECK(canonical_set(regions) == canonical_set(nonlocal_from_cycles(g)));
      const auto minimal = nonlocal_from_subsets(g, true);
      CHECK(ideal_equal(g.num_vars(), with_local(g, regions), with_local(g, minimal)));
    }
  }
}

TEST_CASE("every subset relation is redundant") {
  for (const char* text : {"b=2; 1 1 1", "b=3; 1 -2 1 -2"}) {
    const auto d = build_layered_diagram(parse_braid(text));
    for (const auto& idx : all_indices(d.num_crossings())) {
      const ResolvedGraph g(d, idx);
      const auto gb = buchberger(g.num_vars(), with_local(g, nonlocal_from_regions(g)));
      for (const auto& p : polys_of(nonlocal_from_subsets(g, false))) CHECK(gb.contains(p));
    }
  }
  const auto d = build_layered_diagram(parse_braid("b=4; 1 -2 1 3 -2"));
  CHECK_THROWS_AS(nonlocal_from_subsets(ResolvedGraph(d, all_singular(d)), false, 100), SubsetCapExceeded);
}

TEST_CASE("subset relations: weight additivity and homogeneity") {
  std::mt19937 rng(3);
  for (const auto& text : kWords) {
    const auto d = build_layered_diagram(parse_braid(text));
    for (const auto& idx : all_indices(d.num_crossings())) {
      const ResolvedGraph g(d, idx);
      const int nv = static_cast<int>(g.vertices().size());
      int total = 0;
      for (const auto& v : g.vertices()) total += v.weight();
      std::vector<int> all(nv);
      std::iota(all.begin(), all.end(), 0);
      const auto outer = subset_relation(g, all);
      CHECK(outer.t_power == total);
      CHECK(outer.w_in == Monomial::variable(g.num_vars(), 0));
      CHECK(outer.w_out == Monomial::variable(g.num_vars(), d.max_label()));
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> a, b;
        for (int v = 0; v < nv; ++v) {
          const auto r = rng() % 3;
          if (r == 1) a.push_back(v);
          else if (r == 2) b.push_back(v);
        }
        if (a.empty() || b.empty()) continue;
        std::vector<int> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        std::sort(ab.begin(), ab.end());
        const auto ra = subset_relation(g, a), rb = subset_relation(g, b), rab = subset_relation(g, ab);
        CHECK(rab.t_power == ra.t_power + rb.t_power);
        CHECK(rab.w_out.degree() == rab.w_in.degree());
        CHECK(rab.w_out.is_squarefree());
        CHECK(rab.w_in.is_squarefree());
      }
    }
  }
}

TEST_CASE("local relations") {
  const auto d = build_layered_diagram(parse_braid("b=3; 1 -2 1 -2"));
  const ResolvedGraph g(d, all_singular(d));
  const auto loc = local_relations(g);
  // Four 4-valent vertices with two relations each, four bivalent with one.
  CHECK(loc.size() == 12);
  const auto s = canonical_set(loc);
  CHECK(std::find(s.begin(), s.end(), "t^2*x3*x4 - x0*x1") != s.end());
  CHECK(std::find(s.begin(), s.end(), "t*x5 - x2") != s.end());
  const std::size_t n = g.num_vars();
  const auto gb = buchberger(n, polys_of(loc));
  CHECK(gb.contains(t_times(2, x(n, {3, 4})) + x(n, {0, 1})));
  CHECK(gb.contains(t_times(1, x(n, {3})) + t_times(1, x(n, {4})) + x(n, {0}) + x(n, {1})));
}

TEST_CASE("closed components") {
  const auto u = build_layered_diagram(parse_braid("b=2; 1"));
  const ResolvedGraph smooth(u, {1});
  CHECK(is_disconnected(smooth));
  const auto cc = detect_closed_components(smooth);
  REQUIRE(cc.size() == 1);
  CHECK(cc[0].to_string() == "t - 1");
  CHECK_FALSE(is_disconnected(ResolvedGraph(u, {0})));
  for (const auto& text : kWords) {
    const auto d = build_layered_diagram(parse_braid(text));
    for (const auto& idx : all_indices(d.num_crossings())) {
      const ResolvedGraph g(d, idx);
      const int comps = components_by_union_find(d, idx);
      CHECK(is_disconnected(g) == (comps > 1));
      CHECK(static_cast<int>(detect_closed_components(g).size()) == comps - 1);
    }
  }
}
