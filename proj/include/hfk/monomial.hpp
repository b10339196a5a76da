#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hfk {

// Exponent vector over the edge variables x_0..x_{n}. Comparison operators
// implement the graded reverse lexicographic order with x_n > ... > x_1 > x_0,
// so x_0 is the smallest variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::size_t nvars, std::initializer_list<std::pair<int, int>> powers);
  static Monomial variable(std::size_t nvars, int i);
  static Monomial from_exponents(std::vector<std::uint16_t> exps);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  const std::vector<std::uint16_t>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }
  // True when every exponent is 0 or 1.
  bool is_squarefree() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  // Requires divides(): returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  // "x1*x7^2"; "1" for the unit monomial.
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace hfk
