#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hfk/field.hpp"
#include "hfk/monomial.hpp"

namespace hfk {

template <class C>
struct Term {
  Monomial mono;
  C coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in a fixed number of variables with coefficients in C.
// Terms are kept strictly decreasing in the monomial order and no stored
// coefficient is zero.
template <class C>
class SparsePoly {
 public:
  using TermT = Term<C>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, C c) {
    SparsePoly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }
  static SparsePoly term(Monomial m, C c) {
    SparsePoly p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static SparsePoly variable(std::size_t nvars, int i, C c) {
    return term(Monomial::variable(nvars, i), std::move(c));
  }
  // Terms may arrive in any order; duplicates are summed.
  static SparsePoly from_terms(std::size_t nvars, std::vector<TermT> terms) {
    SparsePoly p(nvars);
    std::sort(terms.begin(), terms.end(),
              [](const TermT& a, const TermT& b) { return a.mono > b.mono; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<TermT>& terms() const noexcept { return terms_; }
  std::vector<TermT>& mutable_terms() noexcept { return terms_; }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const C& lead_coeff() const { return terms_.front().coeff; }
  bool is_constant() const noexcept {
    return terms_.size() == 1 && terms_.front().mono.is_one();
  }
  // Highest total degree among the terms; -1 for zero.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  // a*this + b*m*other, the workhorse of every reduction step.
  static SparsePoly combine(const C& a, const SparsePoly& p, const C& b, const Monomial& m,
                            const SparsePoly& q) {
    SparsePoly r(p.nvars_ ? p.nvars_ : q.nvars_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    const bool unit_m = m.is_one();
    while (i != p.terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end()) {
        r.push_scaled(a, i->mono, i->coeff);
        ++i;
        continue;
      }
      Monomial qm = unit_m ? j->mono : m * j->mono;
      if (i == p.terms_.end()) {
        r.push_scaled(b, std::move(qm), j->coeff);
        ++j;
        continue;
      }
      auto cmp = i->mono <=> qm;
      if (cmp > 0) {
        r.push_scaled(a, i->mono, i->coeff);
        ++i;
      } else if (cmp < 0) {
        r.push_scaled(b, std::move(qm), j->coeff);
        ++j;
      } else {
        C c = a * i->coeff + b * j->coeff;
        if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
    return combine(C::one(), p, C::one(), Monomial(q.nvars_), q);
  }
  friend SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) {
    // Characteristic two throughout this engine.
    return p + q;
  }
  SparsePoly& operator+=(const SparsePoly& q) { return *this = *this + q; }

  SparsePoly scaled(const C& c, const Monomial& m) const {
    SparsePoly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({m * t.mono, c * t.coeff});
    return r;
  }
  friend SparsePoly operator*(const C& c, const SparsePoly& p) {
    return p.scaled(c, Monomial(p.nvars_));
  }
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
    SparsePoly r(p.nvars_);
    for (const auto& t : q.terms_) r = combine(C::one(), r, t.coeff, t.mono, p);
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  void push_scaled(const C& s, Monomial m, const C& c) {
    C v = s * c;
    if (!v.is_zero()) terms_.push_back({std::move(m), std::move(v)});
  }

  std::size_t nvars_ = 0;
  std::vector<TermT> terms_;
};

// Polynomials in the edge variables over F_2(t).
using MultiPoly = SparsePoly<FieldElem>;
// Fraction-free polynomials over F_2[t], used inside the Groebner engine.
using RingPoly = SparsePoly<F2Poly>;

// Terms joined by " + " in decreasing monomial order, each written as
// `coeff * monomial` with unit coefficients omitted. Zero prints as "0".
std::string to_string(const MultiPoly& p);

// Shorthands for building edge-ring polynomials.
MultiPoly var(std::size_t nvars, int i);
MultiPoly t_times(int k, const MultiPoly& p);  // t^k * p

// Clear denominators and remove the F_2[t]-content.
RingPoly to_primitive_ring(const MultiPoly& p);
// Divide by the leading coefficient.
MultiPoly to_monic_field(const RingPoly& p);

}  // namespace hfk
