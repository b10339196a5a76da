#include "hfk/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfk {

bool FieldMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  FieldMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  FieldMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

std::size_t rank(const FieldMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<F2Poly>> a(rows, std::vector<F2Poly>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    F2Poly den = F2Poly::one();
    for (std::size_t j = 0; j < cols; ++j) {
      const F2Poly& d = m.at(i, j).den();
      if (!d.is_one()) den = den * (d / gcd(den, d));
    }
    for (std::size_t j = 0; j < cols; ++j)
      if (!m.at(i, j).is_zero()) a[i][j] = m.at(i, j).num() * (den / m.at(i, j).den());
  }
  std::size_t r = 0;
  F2Poly prev = F2Poly::one();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const F2Poly p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const F2Poly f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        F2Poly v = p * a[i][j] + f * a[r][j];  // characteristic two: minus is plus
        a[i][j] = v.is_zero() ? v : v / prev;
      }
      a[i][c] = F2Poly();
    }
    prev = p;
    ++r;
  }
  return r;
}

}  // namespace hfk
