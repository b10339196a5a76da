#include "hfk/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "hfk/errors.hpp"
#include "hfk/parallel.hpp"

namespace hfk {

std::vector<MultiPoly> algebra_generators(const ResolvedGraph& g, bool reduced) {
  std::vector<MultiPoly> gens = polys_of(local_relations(g));
  for (auto& p : polys_of(nonlocal_from_regions(g))) gens.push_back(std::move(p));
  if (reduced) gens.push_back(var(g.num_vars(), 0));
  return gens;
}

AlgebraPresentation build_algebra(const LayeredBraidDiagram& d, const ResolutionIndex& idx, bool reduced,
                                  const BuchbergerOptions& opts) {
  const ResolvedGraph g(d, idx);
  AlgebraPresentation a;
  a.index = idx;
  a.reduced = reduced;
  a.generators = algebra_generators(g, reduced);
  a.basis = buchberger(g.num_vars(), a.generators, opts);
  a.num_singular = g.num_singular();
  a.homological = 0;
  for (auto e : idx) a.homological += e;
  a.shift_x2 = (a.num_singular - d.strands() + 1) + (-d.num_negative() + a.homological);
  if (reduced) {
    if (!a.basis.is_finite_dimensional())
      throw InfiniteDimensional("reduced algebra at " + to_string(idx) + " is not finite-dimensional");
    a.standard = a.basis.standard_monomials();
  } else {
    a.hilbert = a.basis.hilbert_series();
  }
  return a;
}

int grading_of(const Monomial& m, const AlgebraPresentation& a) { return -2 * m.degree() + a.shift_x2; }

namespace {

MultiPoly multiplier_for(const LayeredBraidDiagram& d, int crossing) {
  const int layer = d.crossing_layers()[crossing];
  const Layer& l = d.layers()[layer];
  const std::size_t n = d.num_vars();
  if (l.sign > 0) return MultiPoly::constant(n, FieldElem::one());
  // t x_a - x_d: a leaves the crossing on the left, d enters on the right.
  const int a = d.edge_label(layer + 1, l.crossing);
  const int dd = d.edge_label(layer, l.crossing + 1);
  return t_times(1, var(n, a)) + var(n, dd);
}

}  // namespace

EdgeMap edge_map(const LayeredBraidDiagram& d, const AlgebraPresentation& source,
                 const AlgebraPresentation& target, int crossing) {
  EdgeMap e;
  e.crossing = crossing;
  e.kind = d.layers()[d.crossing_layers()[crossing]].sign > 0 ? EdgeMap::Kind::Quotient
                                                              : EdgeMap::Kind::Multiply;
  e.multiplier = multiplier_for(d, crossing);
  e.matrix = FieldMatrix(target.standard.size(), source.standard.size());
  if (target.standard.empty() || source.standard.empty()) return e;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  for (std::size_t r = 0; r < target.standard.size(); ++r) row_of.emplace(target.standard[r], r);
  for (std::size_t c = 0; c < source.standard.size(); ++c) {
    const MultiPoly image =
        target.basis.normal_form(e.multiplier * MultiPoly::term(source.standard[c], FieldElem::one()));
    for (const auto& t : image.terms()) e.matrix.at(row_of.at(t.mono), c) = t.coeff;
  }
  return e;
}

bool edge_map_well_defined(const LayeredBraidDiagram& d, const AlgebraPresentation& source,
                           const AlgebraPresentation& target, int crossing) {
  const MultiPoly f = multiplier_for(d, crossing);
  for (const auto& g : source.basis.polys())
    if (!target.basis.contains(f * g)) return false;
  return true;
}

ResolutionIndex index_of_mask(std::size_t mask, int num_crossings) {
  ResolutionIndex idx(static_cast<std::size_t>(num_crossings));
  for (int k = 0; k < num_crossings; ++k) idx[k] = static_cast<std::uint8_t>(mask >> k & 1);
  return idx;
}

const EdgeMap* CubeComplex::edge(std::size_t vertex, int k) const {
  const int id = edge_lookup[vertex * static_cast<std::size_t>(num_crossings()) + k];
  return id < 0 ? nullptr : &edges[id];
}

std::size_t CubeComplex::total_dimension() const noexcept {
  std::size_t s = 0;
  for (const auto& v : vertices) s += v.dimension();
  return s;
}

CubeComplex assemble_cube(const LayeredBraidDiagram& d, const CubeOptions& opts) {
  const int m = d.num_crossings();
  if (m > 20) throw UsageError("too many crossings for a full cube: " + std::to_string(m));
  const std::size_t nv = std::size_t{1} << m;
  const int workers = opts.threads > 0 ? opts.threads : worker_count();
  CubeComplex c;
  c.diagram = d;
  c.reduced = opts.reduced;
  c.vertices.resize(nv);
  parallel_for(
      nv, [&](std::size_t mask) { c.vertices[mask] = build_algebra(d, index_of_mask(mask, m), opts.reduced, opts.groebner); },
      workers);
  c.edge_lookup.assign(nv * static_cast<std::size_t>(m), -1);
  if (!opts.reduced) return c;  // only vertex data is meaningful unreduced
  std::vector<std::pair<std::size_t, int>> todo;
  for (std::size_t mask = 0; mask < nv; ++mask)
    for (int k = 0; k < m; ++k)
      if (!(mask >> k & 1)) todo.emplace_back(mask, k);
  c.edges.resize(todo.size());
  parallel_for(
      todo.size(),
      [&](std::size_t i) {
        const auto [mask, k] = todo[i];
        const std::size_t tgt = mask | (std::size_t{1} << k);
        c.edges[i] = edge_map(d, c.vertices[mask], c.vertices[tgt], k);
        c.edges[i].source = mask;
        c.edges[i].target = tgt;
      },
      workers);
  for (std::size_t i = 0; i < todo.size(); ++i)
    c.edge_lookup[todo[i].first * static_cast<std::size_t>(m) + todo[i].second] = static_cast<int>(i);
  if (opts.validate) validate_cube(c);
  return c;
}

void validate_cube(const CubeComplex& c) {
  const int m = c.num_crossings();
  for (const auto& e : c.edges) {
    const auto& src = c.vertices[e.source];
    const auto& tgt = c.vertices[e.target];
    if (std::popcount(e.target) != std::popcount(e.source) + 1)
      throw GradingViolation("edge does not raise the homological grading by one");
    for (std::size_t r = 0; r < e.matrix.rows(); ++r)
      for (std::size_t col = 0; col < e.matrix.cols(); ++col)
        if (!e.matrix.at(r, col).is_zero() &&
            grading_of(tgt.standard[r], tgt) != grading_of(src.standard[col], src))
          throw GradingViolation("edge " + to_string(src.index) + " -> " + to_string(tgt.index) +
                                 " maps " + src.standard[col].to_string() + " to " +
                                 tgt.standard[r].to_string() + " across Alexander gradings");
  }
  for (std::size_t mask = 0; mask < c.vertices.size(); ++mask)
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        if ((mask >> k & 1) || (mask >> l & 1)) continue;
        const std::size_t mk = mask | (std::size_t{1} << k), ml = mask | (std::size_t{1} << l);
        const FieldMatrix via_k = c.edge(mk, l)->matrix * c.edge(mask, k)->matrix;
        const FieldMatrix via_l = c.edge(ml, k)->matrix * c.edge(mask, l)->matrix;
        if (!(via_k + via_l).is_zero())
          throw DifferentialNotSquareZero("square at " + to_string(index_of_mask(mask, m)) +
                                          " over crossings " + std::to_string(k) + "," +
                                          std::to_string(l) + " does not commute");
      }
}

long long PoincareTable::total() const {
  long long s = 0;
  for (const auto& [k, v] : dims) s += v;
  return s;
}

int PoincareTable::min_homological() const {
  int best = 0;
  bool first = true;
  for (const auto& [k, v] : dims)
    if (v != 0 && (first || k.second < best)) {
      best = k.second;
      first = false;
    }
  return best;
}

PoincareTable PoincareTable::normalized() const {
  PoincareTable t;
  const int shift = min_homological();
  for (const auto& [k, v] : dims)
    if (v != 0) t.dims[{k.first, k.second - shift}] = v;
  return t;
}

IntLaurentPoly PoincareTable::euler() const {
  std::map<int, long long> m;
  for (const auto& [k, v] : dims) m[k.first] += (k.second % 2 == 0 ? 1 : -1) * v;
  return IntLaurentPoly(std::move(m));
}

PoincareTable homology(const CubeComplex& c) {
  if (!c.reduced) throw UsageError("homology needs the reduced complex");
  const int m = c.num_crossings();
  // Chain basis per (A, h): pairs (vertex, basis index).
  using Key = std::pair<int, int>;
  std::map<Key, std::vector<std::pair<std::size_t, std::size_t>>> chains;
  for (std::size_t mask = 0; mask < c.vertices.size(); ++mask) {
    const auto& v = c.vertices[mask];
    for (std::size_t i = 0; i < v.standard.size(); ++i)
      chains[{grading_of(v.standard[i], v), v.homological}].emplace_back(mask, i);
  }
  // rank of d: C^h_A -> C^{h+1}_A
  std::map<Key, std::size_t> ranks;
  for (const auto& [key, src] : chains) {
    auto it = chains.find({key.first, key.second + 1});
    if (it == chains.end()) continue;
    const auto& tgt = it->second;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < tgt.size(); ++r) row_of[tgt[r]] = r;
    FieldMatrix dmat(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto [mask, i] = src[col];
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) continue;
        const EdgeMap* e = c.edge(mask, k);
        for (std::size_t r = 0; r < e->matrix.rows(); ++r) {
          const FieldElem& x = e->matrix.at(r, i);
          if (x.is_zero()) continue;
          auto row = row_of.find({e->target, r});
          if (row == row_of.end())
            throw GradingViolation("differential leaves its Alexander grading");
          dmat.at(row->second, col) += x;
        }
      }
    }
    ranks[key] = rank(dmat);
  }
  PoincareTable t;
  for (const auto& [key, basis] : chains) {
    long long dim = static_cast<long long>(basis.size());
    if (auto it = ranks.find(key); it != ranks.end()) dim -= static_cast<long long>(it->second);
    if (auto it = ranks.find({key.first, key.second - 1}); it != ranks.end())
      dim -= static_cast<long long>(it->second);
    if (dim != 0) t.dims[key] = dim;
  }
  return t;
}

IntLaurentPoly euler_characteristic(const CubeComplex& c) {
  std::map<int, long long> m;
  for (const auto& v : c.vertices)
    for (const auto& mono : v.standard) m[grading_of(mono, v)] += v.homological % 2 == 0 ? 1 : -1;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly doubled_exponents(const IntLaurentPoly& p) {
  std::map<int, long long> m;
  for (auto [e, c] : p.coeffs()) m[2 * e] = c;
  return IntLaurentPoly(std::move(m));
}

InvarianceReport compare_tables(const PoincareTable& a, const PoincareTable& b) {
  InvarianceReport rep;
  rep.first_shift = a.min_homological();
  rep.second_shift = b.min_homological();
  rep.first = a.normalized();
  rep.second = b.normalized();
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : rep.first.dims) keys.insert(k);
  for (const auto& [k, v] : rep.second.dims) keys.insert(k);
  for (const auto& k : keys) {
    auto get = [&](const PoincareTable& t) {
      auto it = t.dims.find(k);
      return it == t.dims.end() ? 0LL : it->second;
    };
    const long long x = get(rep.first), y = get(rep.second);
    if (x != y)
      rep.differences.push_back("A_x2=" + std::to_string(k.first) + " h=" + std::to_string(k.second) +
                                ": " + std::to_string(x) + " vs " + std::to_string(y));
  }
  rep.equal = rep.differences.empty();
  return rep;
}

InvarianceReport compare_invariance(const BraidWord& w1, const BraidWord& w2, const CubeOptions& opts) {
  CubeOptions o = opts;
  o.reduced = true;
  const PoincareTable a = homology(assemble_cube(build_layered_diagram(w1), o));
  const PoincareTable b = homology(assemble_cube(build_layered_diagram(w2), o));
  return compare_tables(a, b);
}

}  // namespace hfk
