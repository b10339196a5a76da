#pragma once

#include <map>
#include <string>

#include "hfk/braid.hpp"

namespace hfk {

// Laurent polynomial in q with integer coefficients; no zero coefficients
// are stored.
class IntLaurentPoly {
 public:
  IntLaurentPoly() = default;
  explicit IntLaurentPoly(std::map<int, long long> coeffs);
  static IntLaurentPoly constant(long long c);
  static IntLaurentPoly monomial(long long c, int exp);

  const std::map<int, long long>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long long coeff(int exp) const;
  int min_exp() const;
  int max_exp() const;
  long long eval_at_one() const;

  IntLaurentPoly shifted(int k) const;  // q^k * this
  // Replaces q by q^-1.
  IntLaurentPoly reflected() const;

  friend IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b);
  friend IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b);
  friend IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b);
  IntLaurentPoly operator-() const;
  friend bool operator==(const IntLaurentPoly&, const IntLaurentPoly&) = default;

  // Exact division; throws DivideByZero when b is zero or does not divide a.
  static IntLaurentPoly exact_div(const IntLaurentPoly& a, const IntLaurentPoly& b);

  // "-1*q^-1 + 3 - q" style with ascending exponents; "0" for zero.
  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::map<int, long long> coeffs_;
};

// Alexander polynomial of the closure via the reduced Burau representation,
// symmetrized and normalized so that Delta(1) = 1.
IntLaurentPoly burau_alexander(const BraidWord& w);

// p == +-q^k * r for some integer k.
bool equal_up_to_unit(const IntLaurentPoly& p, const IntLaurentPoly& r);

}  // namespace hfk
