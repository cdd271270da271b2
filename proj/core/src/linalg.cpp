#include "toricfano/linalg.hpp"

#include <utility>

#include "toricfano/errors.hpp"

namespace toricfano {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
  return from_rows(cols).transpose();
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns. The first
// `pivot_cols` columns are eligible as pivots, the rest ride along.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix augment(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  return row_reduce(m, cols_).size();
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RationalVector> RationalMatrix::solve(const RationalVector& b) const {
  if (rows_ != cols_) throw InputError("solve: matrix is not square");
  return solve_in_span(b);
}

std::optional<RationalVector> RationalMatrix::solve_in_span(const RationalVector& b) const {
  if (b.size() != rows_) throw InputError("solve: right-hand side has wrong length");
  RationalMatrix rhs(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) rhs(i, 0) = b[i];
  RationalMatrix m = augment(*this, rhs);
  const auto pivots = row_reduce(m, cols_);
  if (pivots.size() != cols_) return std::nullopt;
  for (std::size_t i = cols_; i < rows_; ++i)
    if (m(i, cols_) != 0) return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t i = 0; i < cols_; ++i) x[i] = m(i, cols_);
  return x;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  RationalMatrix m = augment(*this, identity(rows_));
  if (row_reduce(m, cols_).size() != cols_) return std::nullopt;
  RationalMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = m(i, cols_ + j);
  return inv;
}

}  // namespace toricfano
