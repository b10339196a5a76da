#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hfk/braid.hpp"
#include "hfk/multipoly.hpp"

namespace hfk {

// One bit per crossing layer, in crossing order. For a positive crossing 0 is
// the singularization; for a negative crossing 0 is the smoothing.
using ResolutionIndex = std::vector<std::uint8_t>;

// "0101" -> {0,1,0,1}. Throws UsageError on bad characters or length.
ResolutionIndex parse_resolution(std::string_view bits, int num_crossings);
std::string to_string(const ResolutionIndex& idx);
// The resolution with every crossing singularized.
ResolutionIndex all_singular(const LayeredBraidDiagram& d);

enum class VertexKind : std::uint8_t { FourValent, Bivalent };

struct Vertex {
  VertexKind kind;
  int layer;
  int position;  // leftmost strand position occupied
  // FourValent: in = {c, d}, out = {a, b} (left, right). Bivalent: in[0], out[0].
  std::array<int, 2> in{-1, -1};
  std::array<int, 2> out{-1, -1};

  int width() const noexcept { return kind == VertexKind::FourValent ? 2 : 1; }
  int weight() const noexcept { return kind == VertexKind::FourValent ? 2 : 1; }
};

// One vertex of the cube: the diagram with every crossing singularized or
// smoothed according to the index.
class ResolvedGraph {
 public:
  static constexpr int kBasepoint = -1;

  ResolvedGraph(const LayeredBraidDiagram& d, ResolutionIndex idx);

  const LayeredBraidDiagram& diagram() const noexcept { return diagram_; }
  const ResolutionIndex& index() const noexcept { return index_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t num_vars() const noexcept { return diagram_.num_vars(); }
  int num_singular() const noexcept { return num_singular_; }

  // Vertex ids at the ends of an edge; kBasepoint for x_n's head and x_0's tail.
  int edge_tail(int e) const { return tail_[e]; }
  int edge_head(int e) const { return head_[e]; }
  // Vertex occupying (layer, position).
  int vertex_at(int layer, int position) const;
  // Whether the crossing in `layer` is singular (false for identity layers).
  bool singular_layer(int layer) const { return layer_singular_[layer]; }

  // "edge: tail -> head" table plus vertex list.
  std::string dump() const;

 private:
  LayeredBraidDiagram diagram_;
  ResolutionIndex index_;
  std::vector<Vertex> vertices_;
  std::vector<int> tail_, head_;
  std::vector<int> slot_;  // layer * b + position - 1 -> vertex id
  std::vector<bool> layer_singular_;
  int num_singular_ = 0;
};

ResolvedGraph resolve(const LayeredBraidDiagram& d, const ResolutionIndex& idx);

// t^w * w_out - w_in with both monomials squarefree; for local relations the
// polynomial is stored directly.
struct Relation {
  enum class Source : std::uint8_t { Cycle, Region, Subset, LocalLinear, LocalQuadratic, Closed };
  Source source;
  MultiPoly poly;
  // Set for non-local relations.
  int t_power = 0;
  Monomial w_out, w_in;

  // "t^6*x1*x7 - x4*x10"; local relations print via the polynomial.
  std::string to_string() const;
};

const char* to_string(Relation::Source s);

// Non-local relation of a vertex set given by its weight and boundary words.
Relation nonlocal_relation(std::size_t nvars, int weight, Monomial w_out, Monomial w_in,
                           Relation::Source src);

std::vector<Relation> local_relations(const ResolvedGraph& g);

// Complement component between two adjacent strands, away from the basepoint.
struct ElementaryRegion {
  int gap;                  // between positions gap and gap+1; gap == b holds the axis
  std::vector<int> levels;  // layer boundaries (mod L) the region spans
  std::vector<int> closure; // sorted vertex ids in the closure
};

struct RegionStructure {
  std::vector<ElementaryRegion> regions;  // innermost first
  // below[i]: regions directly below region i (nearer the axis, adjacent).
  std::vector<std::vector<int>> below;
  // Transitive order: less[i][j] iff region i < region j.
  std::vector<std::vector<bool>> less;
};

RegionStructure elementary_regions(const ResolvedGraph& g);

struct CoherentRegion {
  std::vector<int> members;  // indices into RegionStructure::regions
  std::vector<int> closure;  // sorted vertex ids
  int weight = 0;
};

std::vector<CoherentRegion> coherent_regions(const ResolvedGraph& g, const RegionStructure& rs);
std::vector<CoherentRegion> coherent_regions(const ResolvedGraph& g);

// Weight and boundary words of an arbitrary vertex set.
Relation subset_relation(const ResolvedGraph& g, const std::vector<int>& vertex_ids,
                         Relation::Source src = Relation::Source::Subset);

std::vector<Relation> nonlocal_from_regions(const ResolvedGraph& g);

// A coherently oriented cycle avoiding the basepoint, stored as one vertex id
// per layer together with the strand position it uses at each boundary.
struct Cycle {
  std::vector<int> vertices;   // indexed by layer
  std::vector<int> positions;  // indexed by boundary 0..L-1
};

std::vector<Cycle> enumerate_cycles(const ResolvedGraph& g);
Relation cycle_relation(const ResolvedGraph& g, const Cycle& z);
std::vector<Relation> nonlocal_from_cycles(const ResolvedGraph& g);

// minimal: connected subsets whose induced graph has an oriented cycle;
// otherwise every nonempty subset. Throws SubsetCapExceeded when the number
// of subsets to examine would exceed `cap`.
std::vector<Relation> nonlocal_from_subsets(const ResolvedGraph& g, bool minimal,
                                            std::uint64_t cap = std::uint64_t{1} << 18);

// t^k - 1 for every connected component that misses the basepoint.
std::vector<Relation> detect_closed_components(const ResolvedGraph& g);

// Whether the resolved closure has more than one component.
bool is_disconnected(const ResolvedGraph& g);

// Sorted, de-duplicated canonical strings, for set comparisons.
std::vector<std::string> canonical_set(const std::vector<Relation>& rels);

std::vector<MultiPoly> polys_of(const std::vector<Relation>& rels);

}  // namespace hfk
