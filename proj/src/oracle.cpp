#include "hfk/oracle.hpp"

#include <cstdlib>
#include <vector>

#include "hfk/errors.hpp"

namespace hfk {

IntLaurentPoly::IntLaurentPoly(std::map<int, long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntLaurentPoly IntLaurentPoly::constant(long long c) { return monomial(c, 0); }

IntLaurentPoly IntLaurentPoly::monomial(long long c, int exp) { return IntLaurentPoly({{exp, c}}); }

void IntLaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

long long IntLaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

int IntLaurentPoly::min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int IntLaurentPoly::max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

long long IntLaurentPoly::eval_at_one() const {
  long long s = 0;
  for (auto [e, c] : coeffs_) s += c;
  return s;
}

IntLaurentPoly IntLaurentPoly::shifted(int k) const {
  std::map<int, long long> m;
  for (auto [e, c] : coeffs_) m[e + k] = c;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly IntLaurentPoly::reflected() const {
  std::map<int, long long> m;
  for (auto [e, c] : coeffs_) m[-e] = c;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly operator+(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  auto m = a.coeffs_;
  for (auto [e, c] : b.coeffs_) m[e] += c;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly IntLaurentPoly::operator-() const {
  auto m = coeffs_;
  for (auto& [e, c] : m) c = -c;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly operator-(const IntLaurentPoly& a, const IntLaurentPoly& b) { return a + (-b); }

IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  std::map<int, long long> m;
  for (auto [e1, c1] : a.coeffs_)
    for (auto [e2, c2] : b.coeffs_) m[e1 + e2] += c1 * c2;
  return IntLaurentPoly(std::move(m));
}

IntLaurentPoly IntLaurentPoly::exact_div(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  if (b.is_zero()) throw DivideByZero("Laurent division by zero");
  IntLaurentPoly rem = a;
  std::map<int, long long> quot;
  const int bt = b.max_exp();
  const long long bc = b.coeff(bt);
  const int span = b.max_exp() - b.min_exp();
  while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= span) {
    const int rt = rem.max_exp();
    const long long rc = rem.coeff(rt);
    if (rc % bc != 0) throw DivideByZero("inexact Laurent division");
    quot[rt - bt] = rc / bc;
    rem = rem - b * monomial(rc / bc, rt - bt);
  }
  if (!rem.is_zero()) throw DivideByZero("inexact Laurent division");
  return IntLaurentPoly(std::move(quot));
}

std::string IntLaurentPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto [e, c] : coeffs_) {
    const bool neg = c < 0;
    const long long mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    if (mono.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<IntLaurentPoly>>;

Matrix identity(int n) {
  Matrix m(n, std::vector<IntLaurentPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = IntLaurentPoly::constant(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<IntLaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Reduced Burau matrix of sigma_i^{+-1} on b strands, size (b-1)x(b-1).
Matrix burau_letter(int b, int letter) {
  const int n = b - 1;
  const int i = std::abs(letter);
  const bool inv = letter < 0;
  const auto q = [](long long c, int e) { return IntLaurentPoly::monomial(c, e); };
  const IntLaurentPoly one = q(1, 0), zero;
  Matrix m = identity(n);
  auto place = [&](int at, const std::vector<std::vector<IntLaurentPoly>>& block) {
    for (std::size_t r = 0; r < block.size(); ++r)
      for (std::size_t c = 0; c < block.size(); ++c) m[at + r][at + c] = block[r][c];
  };
  if (n == 1) {
    m[0][0] = inv ? q(-1, -1) : q(-1, 1);
  } else if (i == 1) {
    place(0, inv ? Matrix{{q(-1, -1), zero}, {q(1, -1), one}} : Matrix{{q(-1, 1), zero}, {one, one}});
  } else if (i == n) {
    place(n - 2, inv ? Matrix{{one, one}, {zero, q(-1, -1)}} : Matrix{{one, q(1, 1)}, {zero, q(-1, 1)}});
  } else {
    place(i - 2, inv ? Matrix{{one, one, zero}, {zero, q(-1, -1), zero}, {zero, q(1, -1), one}}
                     : Matrix{{one, q(1, 1), zero}, {zero, q(-1, 1), zero}, {zero, one, one}});
  }
  return m;
}

// Fraction-free (Bareiss) determinant.
IntLaurentPoly determinant(Matrix m) {
  const std::size_t n = m.size();
  IntLaurentPoly prev = IntLaurentPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = IntLaurentPoly::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

IntLaurentPoly burau_alexander(const BraidWord& w) {
  if (closure_components(w.strands, w.letters) != 1) throw NotAKnot("closure is a link");
  const int n = w.strands - 1;
  Matrix rho = identity(n);
  for (int l : w.letters) rho = multiply(rho, burau_letter(w.strands, l));
  for (int i = 0; i < n; ++i) rho[i][i] = rho[i][i] - IntLaurentPoly::constant(1);
  IntLaurentPoly d = determinant(rho);
  // (1 - q) / (1 - q^b)
  d = d * IntLaurentPoly({{0, 1}, {1, -1}});
  d = IntLaurentPoly::exact_div(d, IntLaurentPoly({{0, 1}, {w.strands, -1}}));
  // Center the exponents; a knot's Alexander polynomial has even span.
  d = d.shifted(-(d.min_exp() + d.max_exp()) / 2);
  if (d.eval_at_one() < 0) d = -d;
  return d;
}

bool equal_up_to_unit(const IntLaurentPoly& p, const IntLaurentPoly& r) {
  if (p.is_zero() || r.is_zero()) return p.is_zero() && r.is_zero();
  const IntLaurentPoly s = r.shifted(p.min_exp() - r.min_exp());
  return p == s || p == -s;
}

}  // namespace hfk
