#pragma once

#include <cstddef>
#include <vector>

#include "hfk/field.hpp"

namespace hfk {

// Dense matrix over F_2(t), row-major.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const noexcept;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> data_;
};

// Rank by fraction-free elimination over F_2[t]: each row is scaled to
// polynomial entries, then Bareiss steps with exact division.
std::size_t rank(const FieldMatrix& m);

}  // namespace hfk
