#include "hfk/field.hpp"

#include "hfk/errors.hpp"

namespace hfk {

FieldElem::FieldElem(F2Poly num) : num_(std::move(num)), den_(F2Poly::one()) {}

FieldElem::FieldElem(F2Poly num, F2Poly den) {
  if (den.is_zero()) throw DivideByZero("zero denominator");
  if (num.is_zero()) {
    den_ = F2Poly::one();
    return;
  }
  F2Poly g = gcd(num, den);
  if (g.is_one()) {
    num_ = std::move(num);
    den_ = std::move(den);
  } else {
    num_ = num / g;
    den_ = den / g;
  }
}

FieldElem FieldElem::t_pow(int k) {
  if (k >= 0) return FieldElem(F2Poly::t_pow(k));
  return FieldElem(F2Poly::one(), F2Poly::t_pow(-k));
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw DivideByZero("inverse of zero in F2(t)");
  FieldElem r;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return FieldElem(a.num_ + b.num_);
    return FieldElem(a.num_ + b.num_, a.den_);
  }
  return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return FieldElem(a.num_ * b.num_);
  // Cross-cancel so the product is already reduced.
  const F2Poly g1 = gcd(a.num_, b.den_);
  const F2Poly g2 = gcd(b.num_, a.den_);
  FieldElem r;
  r.num_ = (a.num_ / g1) * (b.num_ / g2);
  r.den_ = (a.den_ / g2) * (b.den_ / g1);
  return r;
}

std::string FieldElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hfk
