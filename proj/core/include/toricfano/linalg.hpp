#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricfano/rational.hpp"

namespace toricfano {

/// Dense row-major matrix over the rationals. Sizes here are tiny
/// (at most the rank of the root system), so everything is plain
/// Gauss-Jordan elimination without any pivoting heuristics.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix&) const = default;

  std::size_t rank() const;
  Rational determinant() const;

  /// Unique solution of A x = b for square nonsingular A; nullopt if singular.
  std::optional<RationalVector> solve(const RationalVector& b) const;

  /// Solution of A x = b for a full-column-rank (possibly tall) A, if b lies
  /// in the column span; nullopt otherwise.
  std::optional<RationalVector> solve_in_span(const RationalVector& b) const;

  std::optional<RationalMatrix> inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace toricfano
