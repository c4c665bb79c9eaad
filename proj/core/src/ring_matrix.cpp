#include "operant/ring_matrix.hpp"

#include "operant/errors.hpp"

#include <sstream>

namespace operant {

RingMatrix::RingMatrix(RingTag tag, size_t rows, size_t cols)
    : tag_(std::move(tag)), rows_(rows), cols_(cols) {
  data_.assign(rows_ * cols_, TrigElement::zero(tag_));
}

RingMatrix RingMatrix::identity(const RingTag& tag, size_t n) {
  RingMatrix m(tag, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = TrigElement::one(tag);
  return m;
}

TrigElement& RingMatrix::at(size_t i, size_t j) {
  if (i >= rows_ || j >= cols_) throw PreconditionError("matrix index out of range");
  return data_[i * cols_ + j];
}

const TrigElement& RingMatrix::at(size_t i, size_t j) const {
  if (i >= rows_ || j >= cols_) throw PreconditionError("matrix index out of range");
  return data_[i * cols_ + j];
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || tag_ != o.tag_)
    throw PreconditionError("matrix addition: shape or tag mismatch");
  RingMatrix r(tag_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || tag_ != o.tag_)
    throw PreconditionError("matrix subtraction: shape or tag mismatch");
  RingMatrix r(tag_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (cols_ != o.rows_ || tag_ != o.tag_)
    throw PreconditionError("matrix product: shape or tag mismatch");
  RingMatrix r(tag_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const TrigElement& lhs = at(i, k);
      if (lhs.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const TrigElement& rhs = o.at(k, j);
        if (rhs.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + lhs * rhs;
      }
    }
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return tag_ == o.tag_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RingMatrix RingMatrix::transposed() const {
  RingMatrix r(tag_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

RingMatrix RingMatrix::select(const std::vector<size_t>& row_idx,
                              const std::vector<size_t>& col_idx) const {
  RingMatrix r(tag_, row_idx.size(), col_idx.size());
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
  return r;
}

std::vector<std::complex<double>> RingMatrix::laplace_eval(const std::complex<double>& z) const {
  std::vector<std::complex<double>> r(data_.size());
  for (size_t i = 0; i < data_.size(); ++i) r[i] = data_[i].laplace_eval(z);
  return r;
}

std::string RingMatrix::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    os << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

TrigElement det(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return TrigElement::one(m.tag());
  if (n == 1) return m.at(0, 0);
  TrigElement acc = TrigElement::zero(m.tag());
  std::vector<size_t> cols(n - 1);
  for (size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    size_t c = 0;
    for (size_t k = 0; k < n; ++k)
      if (k != j) cols[c++] = k;
    std::vector<size_t> rows(n - 1);
    for (size_t k = 1; k < n; ++k) rows[k - 1] = k;
    TrigElement cof = m.at(0, j) * det(m.select(rows, cols));
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

namespace {

void subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur(k);
  // Lexicographic k-subsets of {0..n-1}.
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(idx);
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<TrigElement> minors(const RingMatrix& m, size_t k) {
  std::vector<TrigElement> out;
  if (k == 0 || k > m.rows() || k > m.cols()) return out;
  std::vector<std::vector<size_t>> row_sets, col_sets;
  subsets(m.rows(), k, row_sets);
  subsets(m.cols(), k, col_sets);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) out.push_back(det(m.select(rs, cs)));
  return out;
}

}  // namespace operant
