#pragma once

#include <string>

#include "hfk/gf2poly.hpp"

namespace hfk {

// Element of the rational function field F_2(t), kept as a reduced fraction
// num/den with den != 0 and gcd(num, den) == 1. Every nonzero polynomial over
// F_2 is monic, so the representation is canonical; zero is 0/1.
class FieldElem {
 public:
  FieldElem() : den_(F2Poly::one()) {}
  FieldElem(F2Poly num);  // NOLINT: polynomials embed implicitly
  FieldElem(F2Poly num, F2Poly den);

  static FieldElem zero() { return {}; }
  static FieldElem one() { return FieldElem(F2Poly::one()); }
  static FieldElem t() { return FieldElem(F2Poly(0b10)); }
  static FieldElem t_pow(int k);  // k may be negative

  const F2Poly& num() const noexcept { return num_; }
  const F2Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }

  FieldElem inv() const;  // throws DivideByZero on zero

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  FieldElem operator-() const { return *this; }
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  // "t^2 + 1", or "(t^2 + 1)/(t)" when the denominator is not 1.
  std::string to_string() const;

 private:
  F2Poly num_;
  F2Poly den_;
};

}  // namespace hfk
