#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk/braid.hpp"
#include "hfk/groebner.hpp"
#include "hfk/linalg.hpp"
#include "hfk/oracle.hpp"
#include "hfk/resolution.hpp"

namespace hfk {

// Presentation of the algebra at one cube vertex. Gradings are doubled so
// the half-integer shifts stay exact.
struct AlgebraPresentation {
  ResolutionIndex index;
  bool reduced = true;
  std::vector<MultiPoly> generators;
  GroebnerBasis basis;
  // Reduced presentations only: standard monomials of the quotient.
  std::vector<Monomial> standard;
  // Unreduced presentations only.
  std::optional<HilbertSeries> hilbert;
  int num_singular = 0;
  // Doubled Alexander grading of the monomial 1, including the cube shift.
  int shift_x2 = 0;
  int homological = 0;

  bool is_zero() const noexcept { return basis.is_unit(); }
  std::size_t dimension() const noexcept { return standard.size(); }
};

// Local relations plus the coherent-region relations of the resolution.
std::vector<MultiPoly> algebra_generators(const ResolvedGraph& g, bool reduced);

AlgebraPresentation build_algebra(const LayeredBraidDiagram& d, const ResolutionIndex& idx,
                                  bool reduced, const BuchbergerOptions& opts = {});

// Doubled final Alexander grading: -2|e| + (sigma - b + 1) + (-N + sum eps).
int grading_of(const Monomial& m, const AlgebraPresentation& a);

struct EdgeMap {
  enum class Kind : std::uint8_t { Quotient, Multiply };
  std::size_t source = 0, target = 0;  // cube vertex bitmasks
  int crossing = 0;                    // position in crossing order
  Kind kind = Kind::Quotient;
  MultiPoly multiplier;                // 1 for quotient maps
  FieldMatrix matrix;                  // target basis x source basis
};

// The map across `crossing` from the 0-side presentation to the 1-side one.
EdgeMap edge_map(const LayeredBraidDiagram& d, const AlgebraPresentation& source,
                 const AlgebraPresentation& target, int crossing);

// Whether the map respects the defining ideals: every source basis element
// times the multiplier lies in the target ideal.
bool edge_map_well_defined(const LayeredBraidDiagram& d, const AlgebraPresentation& source,
                           const AlgebraPresentation& target, int crossing);

struct CubeOptions {
  bool reduced = true;
  BuchbergerOptions groebner;
  // Check d^2 = 0 and grading homogeneity during assembly.
  bool validate = true;
  int threads = 0;  // 0: use HFK_THREADS / hardware
};

// Bitmask conventions: bit k of a vertex index is eps_k.
struct CubeComplex {
  LayeredBraidDiagram diagram;
  bool reduced = true;
  std::vector<AlgebraPresentation> vertices;
  std::vector<EdgeMap> edges;
  std::vector<int> edge_lookup;  // vertex * num_crossings + k -> edge id, or -1

  int num_crossings() const noexcept { return diagram.num_crossings(); }
  const EdgeMap* edge(std::size_t vertex, int k) const;
  std::size_t total_dimension() const noexcept;
};

ResolutionIndex index_of_mask(std::size_t mask, int num_crossings);

CubeComplex assemble_cube(const LayeredBraidDiagram& d, const CubeOptions& opts = {});

// Throws DifferentialNotSquareZero or GradingViolation.
void validate_cube(const CubeComplex& c);

// Bigraded dimensions keyed by (doubled Alexander grading, homological
// grading sum eps).
struct PoincareTable {
  std::map<std::pair<int, int>, long long> dims;

  long long total() const;
  // Smallest homological grading with a nonzero entry; 0 when empty.
  int min_homological() const;
  // Same table moved so the smallest homological grading is 0.
  PoincareTable normalized() const;
  // sum (-1)^h dim q^A, doubled exponents.
  IntLaurentPoly euler() const;
  friend bool operator==(const PoincareTable&, const PoincareTable&) = default;
};

PoincareTable homology(const CubeComplex& c);
// Computed from the chain groups directly.
IntLaurentPoly euler_characteristic(const CubeComplex& c);

// Delta(q) rewritten in the doubled-exponent variable q^(1/2).
IntLaurentPoly doubled_exponents(const IntLaurentPoly& p);

struct InvarianceReport {
  bool equal = false;
  PoincareTable first, second;  // normalized
  int first_shift = 0, second_shift = 0;
  std::vector<std::string> differences;
};

InvarianceReport compare_tables(const PoincareTable& a, const PoincareTable& b);
InvarianceReport compare_invariance(const BraidWord& w1, const BraidWord& w2,
                                    const CubeOptions& opts = {});

}  // namespace hfk
