#pragma once

#include "operant/trig_element.hpp"

#include <complex>
#include <vector>

namespace operant {

// Dense matrix over the operator ring, row-major.
class RingMatrix {
 public:
  RingMatrix(RingTag tag, size_t rows, size_t cols);
  static RingMatrix identity(const RingTag& tag, size_t n);

  const RingTag& tag() const { return tag_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  TrigElement& at(size_t i, size_t j);
  const TrigElement& at(size_t i, size_t j) const;

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  bool operator==(const RingMatrix& o) const;
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }

  RingMatrix transposed() const;
  bool is_zero() const;

  // Rows and columns to keep, in the given order.
  RingMatrix select(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const;

  // Entry-wise transform-side evaluation, row-major.
  std::vector<std::complex<double>> laplace_eval(const std::complex<double>& z) const;

  std::string str() const;

 private:
  RingTag tag_;
  size_t rows_, cols_;
  std::vector<TrigElement> data_;
};

// Determinant by cofactor expansion; requires square.
TrigElement det(const RingMatrix& m);

// All k x k minors (row/column subsets in lexicographic order).
std::vector<TrigElement> minors(const RingMatrix& m, size_t k);

}  // namespace operant
