#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hfk {

// Dense univariate polynomial in t over the two-element field, stored as a
// little-endian bit vector in 64-bit limbs. The limb vector never carries a
// trailing zero limb, so the zero polynomial has no limbs.
class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(std::uint64_t bits);

  static F2Poly zero() { return {}; }
  static F2Poly one() { return F2Poly(1); }
  static F2Poly t_pow(int k);
  // 1 + t^k
  static F2Poly one_plus_t_pow(int k);

  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_one() const noexcept { return limbs_.size() == 1 && limbs_[0] == 1; }
  // -1 for the zero polynomial.
  int degree() const noexcept;
  bool coeff(int i) const noexcept;
  // Largest k with t^k dividing this polynomial; 0 for zero.
  int t_valuation() const noexcept;

  F2Poly& operator+=(const F2Poly& rhs);
  F2Poly& operator-=(const F2Poly& rhs) { return *this += rhs; }
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator-(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  F2Poly& operator*=(const F2Poly& rhs) { return *this = *this * rhs; }

  F2Poly shifted(int k) const;  // multiply by t^k, k >= 0

  // a = q*b + r with deg r < deg b. Throws DivideByZero when b == 0.
  static void divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r);
  friend F2Poly operator/(const F2Poly& a, const F2Poly& b);
  friend F2Poly operator%(const F2Poly& a, const F2Poly& b);
  friend F2Poly gcd(F2Poly a, F2Poly b);

  friend bool operator==(const F2Poly&, const F2Poly&) = default;
  // Total order: by degree, then bitwise from the top coefficient.
  friend std::strong_ordering operator<=>(const F2Poly& a, const F2Poly& b);

  // "t^3 + t + 1"; "0" for zero.
  std::string to_string(char var = 't') const;
  std::size_t hash() const noexcept;

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

}  // namespace hfk
