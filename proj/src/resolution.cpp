#include "hfk/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hfk/errors.hpp"

namespace hfk {

ResolutionIndex parse_resolution(std::string_view bits, int num_crossings) {
  if (static_cast<int>(bits.size()) != num_crossings)
    throw UsageError("resolution needs " + std::to_string(num_crossings) + " bits, got '" +
                     std::string(bits) + "'");
  ResolutionIndex idx;
  for (char c : bits) {
    if (c != '0' && c != '1') throw UsageError("resolution bits must be 0 or 1");
    idx.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return idx;
}

std::string to_string(const ResolutionIndex& idx) {
  std::string s;
  for (auto b : idx) s += static_cast<char>('0' + b);
  return s;
}

ResolutionIndex all_singular(const LayeredBraidDiagram& d) {
  ResolutionIndex idx;
  for (int k : d.crossing_layers()) idx.push_back(d.layers()[k].sign > 0 ? 0 : 1);
  return idx;
}

ResolvedGraph::ResolvedGraph(const LayeredBraidDiagram& d, ResolutionIndex idx)
    : diagram_(d), index_(std::move(idx)) {
  if (static_cast<int>(index_.size()) != d.num_crossings())
    throw UsageError("resolution index has " + std::to_string(index_.size()) + " bits, diagram has " +
                     std::to_string(d.num_crossings()) + " crossings");
  const int b = d.strands();
  const int L = d.num_layers();
  slot_.assign(static_cast<std::size_t>(L * b), -1);
  layer_singular_.assign(static_cast<std::size_t>(L), false);
  auto add = [&](Vertex v) {
    const int id = static_cast<int>(vertices_.size());
    for (int w = 0; w < v.width(); ++w) slot_[v.layer * b + v.position - 1 + w] = id;
    vertices_.push_back(v);
  };
  int crossing_no = 0;
  for (int k = 0; k < L; ++k) {
    const Layer& layer = d.layers()[k];
    bool singular = false;
    if (!layer.is_identity()) {
      const int eps = index_[crossing_no++];
      singular = (layer.sign > 0) == (eps == 0);
    }
    layer_singular_[k] = singular;
    for (int p = 1; p <= b; ++p) {
      if (singular && p == layer.crossing) {
        Vertex v{VertexKind::FourValent, k, p};
        v.in = {d.edge_label(k, p), d.edge_label(k, p + 1)};
        v.out = {d.edge_label(k + 1, p), d.edge_label(k + 1, p + 1)};
        add(v);
        ++p;
        ++num_singular_;
        continue;
      }
      Vertex v{VertexKind::Bivalent, k, p};
      v.in[0] = d.edge_label(k, p);
      v.out[0] = d.edge_label(k + 1, p);
      add(v);
    }
  }
  const int n = d.max_label();
  tail_.assign(static_cast<std::size_t>(n) + 1, kBasepoint);
  head_.assign(static_cast<std::size_t>(n) + 1, kBasepoint);
  for (int id = 0; id < static_cast<int>(vertices_.size()); ++id) {
    const Vertex& v = vertices_[id];
    for (int w = 0; w < v.width(); ++w) {
      head_[v.in[w]] = id;
      tail_[v.out[w]] = id;
    }
  }
}

int ResolvedGraph::vertex_at(int layer, int position) const {
  return slot_[layer * diagram_.strands() + position - 1];
}

std::string ResolvedGraph::dump() const {
  std::ostringstream out;
  out << "resolution " << hfk::to_string(index_) << "\n";
  for (std::size_t id = 0; id < vertices_.size(); ++id) {
    const Vertex& v = vertices_[id];
    out << "v" << id << " layer " << v.layer << " pos " << v.position;
    if (v.kind == VertexKind::FourValent)
      out << " 4-valent in x" << v.in[0] << " x" << v.in[1] << " out x" << v.out[0] << " x" << v.out[1];
    else
      out << " bivalent in x" << v.in[0] << " out x" << v.out[0];
    out << "\n";
  }
  auto end = [](int id) { return id == kBasepoint ? std::string("*") : "v" + std::to_string(id); };
  for (std::size_t e = 0; e < tail_.size(); ++e)
    out << "x" << e << ": " << end(tail_[e]) << " -> " << end(head_[e]) << "\n";
  return out.str();
}

ResolvedGraph resolve(const LayeredBraidDiagram& d, const ResolutionIndex& idx) {
  return ResolvedGraph(d, idx);
}

const char* to_string(Relation::Source s) {
  switch (s) {
    case Relation::Source::Cycle: return "cycle";
    case Relation::Source::Region: return "region";
    case Relation::Source::Subset: return "subset";
    case Relation::Source::LocalLinear: return "local-linear";
    case Relation::Source::LocalQuadratic: return "local-quadratic";
    case Relation::Source::Closed: return "closed-component";
  }
  return "?";
}

std::string Relation::to_string() const {
  if (w_out.nvars() == 0) return hfk::to_string(poly);
  std::string lhs;
  if (t_power == 1) lhs = "t";
  else if (t_power > 1) lhs = "t^" + std::to_string(t_power);
  if (!w_out.is_one()) lhs += (lhs.empty() ? "" : "*") + w_out.to_string();
  if (lhs.empty()) lhs = "1";
  return lhs + " - " + w_in.to_string();
}

Relation nonlocal_relation(std::size_t nvars, int weight, Monomial w_out, Monomial w_in,
                           Relation::Source src) {
  Relation r{src, MultiPoly(nvars), weight, std::move(w_out), std::move(w_in)};
  r.poly = MultiPoly::from_terms(nvars, {{r.w_out, FieldElem::t_pow(weight)}, {r.w_in, FieldElem::one()}});
  return r;
}

std::vector<Relation> local_relations(const ResolvedGraph& g) {
  const std::size_t n = g.num_vars();
  std::vector<Relation> out;
  for (const Vertex& v : g.vertices()) {
    if (v.kind == VertexKind::Bivalent) {
      out.push_back(nonlocal_relation(n, 1, Monomial::variable(n, v.out[0]),
                                      Monomial::variable(n, v.in[0]), Relation::Source::LocalLinear));
      continue;
    }
    const auto [a, b] = v.out;
    const auto [c, d] = v.in;
    Relation lin{Relation::Source::LocalLinear, t_times(1, var(n, a) + var(n, b)) + var(n, c) + var(n, d), 0, {}, {}};
    out.push_back(std::move(lin));
    out.push_back(nonlocal_relation(n, 2, Monomial(n, {{a, 1}, {b, 1}}), Monomial(n, {{c, 1}, {d, 1}}),
                                    Relation::Source::LocalQuadratic));
  }
  return out;
}

RegionStructure elementary_regions(const ResolvedGraph& g) {
  const LayeredBraidDiagram& d = g.diagram();
  const int b = d.strands();
  const int L = d.num_layers();
  RegionStructure rs;

  auto closure_between = [&](int gap, int first_layer, int last_layer, std::vector<int> cuts) {
    // Vertices on the two bounding strands in layers first..last (cyclic),
    // plus the pinching vertices.
    std::set<int> ids(cuts.begin(), cuts.end());
    for (int k = first_layer; k <= last_layer; ++k) {
      const int layer = k % L;
      ids.insert(g.vertex_at(layer, gap));
      if (gap < b) ids.insert(g.vertex_at(layer, gap + 1));
    }
    return std::vector<int>(ids.begin(), ids.end());
  };

  for (int gap = b; gap >= 1; --gap) {
    std::vector<int> cuts;
    for (int k = 0; k < L; ++k)
      if (g.singular_layer(k) && d.layers()[k].crossing == gap) cuts.push_back(k);
    if (cuts.empty()) {
      if (gap == 1) continue;  // touches the basepoint
      ElementaryRegion e{gap, {}, closure_between(gap, 0, L - 1, {})};
      e.levels.resize(static_cast<std::size_t>(L));
      std::iota(e.levels.begin(), e.levels.end(), 0);
      rs.regions.push_back(std::move(e));
      continue;
    }
    for (std::size_t j = 0; j < cuts.size(); ++j) {
      const int k1 = cuts[j];
      int k2 = cuts[(j + 1) % cuts.size()];
      if (k2 <= k1) k2 += L;
      ElementaryRegion e{gap, {}, {}};
      for (int bnd = k1 + 1; bnd <= k2; ++bnd) e.levels.push_back(bnd % L);
      std::sort(e.levels.begin(), e.levels.end());
      if (gap == 1 && e.levels.front() == 0) continue;  // the arc through the basepoint
      const int cut_a = g.vertex_at(k1, gap);
      const int cut_b = g.vertex_at(k2 % L, gap);
      e.closure = closure_between(gap, k1 + 1, k2 - 1, {cut_a, cut_b});
      rs.regions.push_back(std::move(e));
    }
  }

  const std::size_t r = rs.regions.size();
  rs.below.assign(r, {});
  rs.less.assign(r, std::vector<bool>(r, false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto& hi = rs.regions[i];
      const auto& lo = rs.regions[j];
      if (lo.gap != hi.gap + 1) continue;
      std::vector<int> common;
      std::set_intersection(hi.levels.begin(), hi.levels.end(), lo.levels.begin(), lo.levels.end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        rs.below[i].push_back(static_cast<int>(j));
        rs.less[j][i] = true;
      }
    }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i)
      if (rs.less[i][k])
        for (std::size_t j = 0; j < r; ++j)
          if (rs.less[k][j]) rs.less[i][j] = true;
  return rs;
}

namespace {

int weight_of(const ResolvedGraph& g, const std::vector<int>& ids) {
  int w = 0;
  for (int id : ids) w += g.vertices()[id].weight();
  return w;
}

}  // namespace

std::vector<CoherentRegion> coherent_regions(const ResolvedGraph& g, const RegionStructure& rs) {
  // Regions are listed innermost first, so everything below region i comes
  // before it; a down-set is built by deciding membership in that order.
  std::vector<CoherentRegion> out;
  const std::size_t r = rs.regions.size();
  std::vector<bool> in(r, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == r) {
      CoherentRegion c;
      std::set<int> ids;
      for (std::size_t k = 0; k < r; ++k)
        if (in[k]) {
          c.members.push_back(static_cast<int>(k));
          ids.insert(rs.regions[k].closure.begin(), rs.regions[k].closure.end());
        }
      if (c.members.empty()) return;
      c.closure.assign(ids.begin(), ids.end());
      c.weight = weight_of(g, c.closure);
      out.push_back(std::move(c));
      return;
    }
    rec(i + 1);
    const bool allowed =
        std::all_of(rs.below[i].begin(), rs.below[i].end(), [&](int j) { return in[j]; });
    if (allowed) {
      in[i] = true;
      rec(i + 1);
      in[i] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const CoherentRegion& a, const CoherentRegion& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<CoherentRegion> coherent_regions(const ResolvedGraph& g) {
  return coherent_regions(g, elementary_regions(g));
}

Relation subset_relation(const ResolvedGraph& g, const std::vector<int>& vertex_ids,
                         Relation::Source src) {
  const std::size_t n = g.num_vars();
  std::vector<bool> in_set(g.vertices().size(), false);
  for (int id : vertex_ids) in_set[id] = true;
  auto outside = [&](int id) { return id == ResolvedGraph::kBasepoint || !in_set[id]; };
  Monomial w_out(n), w_in(n);
  for (int id : vertex_ids) {
    const Vertex& v = g.vertices()[id];
    for (int w = 0; w < v.width(); ++w) {
      if (outside(g.edge_head(v.out[w]))) w_out = w_out * Monomial::variable(n, v.out[w]);
      if (outside(g.edge_tail(v.in[w]))) w_in = w_in * Monomial::variable(n, v.in[w]);
    }
  }
  return nonlocal_relation(n, weight_of(g, vertex_ids), std::move(w_out), std::move(w_in), src);
}

std::vector<Relation> nonlocal_from_regions(const ResolvedGraph& g) {
  std::vector<Relation> out;
  for (const auto& c : coherent_regions(g))
    out.push_back(subset_relation(g, c.closure, Relation::Source::Region));
  return out;
}

std::vector<Cycle> enumerate_cycles(const ResolvedGraph& g) {
  const LayeredBraidDiagram& d = g.diagram();
  const int b = d.strands();
  const int L = d.num_layers();
  std::vector<Cycle> out;
  Cycle cur;
  cur.vertices.resize(static_cast<std::size_t>(L));
  cur.positions.resize(static_cast<std::size_t>(L));
  std::function<void(int, int)> walk = [&](int layer, int pos) {
    const int id = g.vertex_at(layer, pos);
    const Vertex& v = g.vertices()[id];
    cur.vertices[layer] = id;
    cur.positions[layer] = pos;
    for (int w = 0; w < v.width(); ++w) {
      const int next = v.position + w;
      if (layer + 1 < L) {
        walk(layer + 1, next);
      } else if (next == cur.positions[0]) {
        // Closing up at the bottom; position 1 would run into the basepoint.
        out.push_back(cur);
      }
    }
  };
  for (int p = 2; p <= b; ++p) walk(0, p);
  return out;
}

Relation cycle_relation(const ResolvedGraph& g, const Cycle& z) {
  const LayeredBraidDiagram& d = g.diagram();
  const int L = d.num_layers();
  const std::size_t n = g.num_vars();
  std::set<int> on_cycle(z.vertices.begin(), z.vertices.end());
  // Weight counts the closure of the bounded region: the cycle plus all
  // vertices strictly nearer the axis in each layer.
  int weight = 0;
  for (int k = 0; k < L; ++k) {
    const Vertex& zv = g.vertices()[z.vertices[k]];
    weight += zv.weight();
    for (int p = zv.position + zv.width(); p <= d.strands(); ++p) {
      const Vertex& inner = g.vertices()[g.vertex_at(k, p)];
      if (inner.position == p) weight += inner.weight();
    }
  }
  auto position_at = [&](int boundary) { return z.positions[boundary % L]; };
  auto on_z = [&](int id) { return id != ResolvedGraph::kBasepoint && on_cycle.count(id) > 0; };
  Monomial w_out(n), w_in(n);
  for (int k = 0; k < L; ++k) {
    const Vertex& v = g.vertices()[z.vertices[k]];
    for (int w = 0; w < v.width(); ++w) {
      const int p = v.position + w;
      const int eo = v.out[w];
      if (p < position_at(k + 1) && !on_z(g.edge_head(eo))) w_out = w_out * Monomial::variable(n, eo);
      const int ei = v.in[w];
      if (p < position_at(k) && !on_z(g.edge_tail(ei))) w_in = w_in * Monomial::variable(n, ei);
    }
  }
  return nonlocal_relation(n, weight, std::move(w_out), std::move(w_in), Relation::Source::Cycle);
}

std::vector<Relation> nonlocal_from_cycles(const ResolvedGraph& g) {
  std::vector<Relation> out;
  for (const auto& z : enumerate_cycles(g)) out.push_back(cycle_relation(g, z));
  return out;
}

namespace {

std::vector<std::vector<int>> undirected_adjacency(const ResolvedGraph& g) {
  std::vector<std::vector<int>> adj(g.vertices().size());
  for (std::size_t e = 0; e < g.num_vars(); ++e) {
    const int t = g.edge_tail(static_cast<int>(e)), h = g.edge_head(static_cast<int>(e));
    if (t == ResolvedGraph::kBasepoint || h == ResolvedGraph::kBasepoint || t == h) continue;
    adj[t].push_back(h);
    adj[h].push_back(t);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

bool induced_has_cycle(const ResolvedGraph& g, const std::vector<int>& ids) {
  const std::size_t nv = g.vertices().size();
  std::vector<int> local(nv, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
  std::vector<int> indeg(ids.size(), 0);
  std::vector<std::vector<int>> succ(ids.size());
  for (std::size_t e = 0; e < g.num_vars(); ++e) {
    const int t = g.edge_tail(static_cast<int>(e)), h = g.edge_head(static_cast<int>(e));
    if (t == ResolvedGraph::kBasepoint || h == ResolvedGraph::kBasepoint) continue;
    if (local[t] < 0 || local[h] < 0) continue;
    succ[local[t]].push_back(local[h]);
    ++indeg[local[h]];
  }
  std::vector<int> queue;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
  std::size_t done = 0;
  while (done < queue.size()) {
    const int u = queue[done++];
    for (int w : succ[u])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return done < ids.size();
}

}  // namespace

std::vector<Relation> nonlocal_from_subsets(const ResolvedGraph& g, bool minimal, std::uint64_t cap) {
  const std::size_t nv = g.vertices().size();
  std::vector<Relation> out;
  if (!minimal) {
    if (nv >= 63 || (std::uint64_t{1} << nv) - 1 > cap)
      throw SubsetCapExceeded(std::to_string(nv) + " vertices give more than " + std::to_string(cap) +
                              " subsets");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
      std::vector<int> ids;
      for (std::size_t i = 0; i < nv; ++i)
        if (mask >> i & 1) ids.push_back(static_cast<int>(i));
      out.push_back(subset_relation(g, ids));
    }
    return out;
  }
  // Connected subsets, each produced once: grow from its smallest vertex,
  // extending only by exclusive neighbours (Wernicke's ESU scheme).
  const auto adj = undirected_adjacency(g);
  std::uint64_t visited = 0;
  std::vector<int> current;
  std::vector<bool> in_cur(nv, false), near_cur(nv, false);
  std::function<void(int, std::vector<int>)> extend = [&](int root, std::vector<int> ext) {
    if (++visited > cap)
      throw SubsetCapExceeded("more than " + std::to_string(cap) + " connected subsets");
    std::vector<int> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    if (induced_has_cycle(g, sorted)) out.push_back(subset_relation(g, sorted));
    while (!ext.empty()) {
      const int w = ext.back();
      ext.pop_back();
      std::vector<int> next_ext = ext;
      std::vector<int> marked;
      for (int u : adj[w])
        if (u > root && !in_cur[u] && !near_cur[u]) {
          next_ext.push_back(u);
          marked.push_back(u);
        }
      for (int u : marked) near_cur[u] = true;
      const bool w_was_near = near_cur[w];
      near_cur[w] = true;
      current.push_back(w);
      in_cur[w] = true;
      extend(root, next_ext);
      in_cur[w] = false;
      current.pop_back();
      near_cur[w] = w_was_near;
      for (int u : marked) near_cur[u] = false;
    }
  };
  for (int v = 0; v < static_cast<int>(nv); ++v) {
    current = {v};
    in_cur.assign(nv, false);
    near_cur.assign(nv, false);
    in_cur[v] = true;
    near_cur[v] = true;
    std::vector<int> ext;
    for (int u : adj[v])
      if (u > v) {
        ext.push_back(u);
        near_cur[u] = true;
      }
    extend(v, ext);
  }
  return out;
}

namespace {

std::vector<int> component_ids(const ResolvedGraph& g) {
  const std::size_t nv = g.vertices().size();
  std::vector<int> comp(nv, -1);
  const auto adj = undirected_adjacency(g);
  int next = 0;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

std::vector<Relation> detect_closed_components(const ResolvedGraph& g) {
  const auto comp = component_ids(g);
  const int based = comp[g.edge_head(0)];
  const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Relation> out;
  for (int c = 0; c < ncomp; ++c) {
    if (c == based) continue;
    std::vector<int> ids;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (comp[i] == c) ids.push_back(static_cast<int>(i));
    Relation r = subset_relation(g, ids, Relation::Source::Closed);
    out.push_back(std::move(r));
  }
  return out;
}

bool is_disconnected(const ResolvedGraph& g) {
  const auto comp = component_ids(g);
  return std::any_of(comp.begin(), comp.end(), [](int c) { return c > 0; });
}

std::vector<std::string> canonical_set(const std::vector<Relation>& rels) {
  std::vector<std::string> out;
  for (const auto& r : rels) out.push_back(r.to_string());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MultiPoly> polys_of(const std::vector<Relation>& rels) {
  std::vector<MultiPoly> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back(r.poly);
  return out;
}

}  // namespace hfk
