#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fewdist/rational.hpp"

namespace fewdist {

/// Dense matrix of exact rationals, row-major. Value type; empty (0x0)
/// matrices are legal.
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RMatrix identity(std::size_t n);
  static RMatrix scaled_identity(std::size_t n, const Rational& c);

  /// Convenience for tests and fixtures; every row must have equal length.
  static RMatrix from_rows(
      std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RMatrix transposed() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  /// Submatrix picked by row and column index lists (order preserved).
  RMatrix submatrix(const std::vector<std::size_t>& row_ids,
                    const std::vector<std::size_t>& col_ids) const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RMatrix operator*(const RMatrix& a, const RMatrix& b);
std::vector<Rational> operator*(const RMatrix& m,
                                const std::vector<Rational>& v);

}  // namespace fewdist
