#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hfk/multipoly.hpp"

namespace hfk {

struct BuchbergerOptions {
  // Largest S-pair lcm degree the engine will process before giving up with
  // DegreeCapExceeded.
  int degree_cap = 48;
};

// Generating function sum_d dim(quotient_d) q^d written as
// numerator(q) / (1 - q)^denominator_power, with common factors of (1 - q)
// cancelled.
struct HilbertSeries {
  std::vector<long long> numerator;  // coefficients of q^0, q^1, ...
  int denominator_power = 0;

  bool is_zero() const noexcept { return numerator.empty(); }
  // Expansion coefficient of q^d.
  long long coefficient(int d) const;
  std::string to_string() const;
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

// Reduced Groebner basis under graded reverse lexicographic order. Elements are
// monic and sorted by decreasing leading monomial, so equal ideals give equal
// objects.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, std::vector<MultiPoly> reduced);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<MultiPoly>& polys() const noexcept { return polys_; }
  const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
  bool is_unit() const noexcept;
  bool is_zero_ideal() const noexcept { return polys_.empty(); }

  MultiPoly normal_form(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }
  bool is_standard(const Monomial& m) const noexcept;
  // Whether the quotient ring is a finite-dimensional vector space.
  bool is_finite_dimensional() const noexcept;

  // Monomials outside the leading-term ideal, by ascending degree and
  // decreasing order within a degree. Without a cap the quotient must be
  // finite-dimensional (InfiniteDimensional otherwise); with a cap only
  // degrees <= cap are listed.
  std::vector<Monomial> standard_monomials(std::optional<int> degree_cap = std::nullopt) const;
  HilbertSeries hilbert_series() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<MultiPoly> polys_;
  std::vector<Monomial> leads_;
};

GroebnerBasis buchberger(std::size_t nvars, std::span<const MultiPoly> generators,
                         const BuchbergerOptions& opts = {});

// True when the two generator lists span the same ideal.
bool ideal_equal(std::size_t nvars, std::span<const MultiPoly> a, std::span<const MultiPoly> b,
                 const BuchbergerOptions& opts = {});

// Hilbert series of the quotient by a monomial ideal.
HilbertSeries hilbert_series_of_monomial_ideal(std::size_t nvars,
                                               std::span<const Monomial> generators);

}  // namespace hfk
