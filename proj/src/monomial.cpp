#include "hfk/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace hfk {

Monomial::Monomial(std::size_t nvars, std::initializer_list<std::pair<int, int>> powers)
    : exps_(nvars, 0) {
  for (auto [var, e] : powers) {
    exps_.at(static_cast<std::size_t>(var)) += static_cast<std::uint16_t>(e);
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, int i) {
  Monomial m(nvars);
  m.exps_.at(static_cast<std::size_t>(i)) = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::from_exponents(std::vector<std::uint16_t> exps) {
  Monomial m;
  m.exps_ = std::move(exps);
  for (auto e : m.exps_) m.degree_ += e;
  return m;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  assert(divides(other));
  Monomial q = other;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
  q.degree_ -= degree_;
  return q;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.exps_.size() == b.exps_.size());
  Monomial r = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ += b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  // Reverse lexicographic tie-break: the first difference counted from the
  // smallest variable decides, and a larger exponent there means smaller.
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != b.exps_[i]) return b.exps_[i] <=> a.exps_[i];
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto e : exps_) h = (h ^ e) * 0x100000001b3ull;
  return h;
}

}  // namespace hfk
