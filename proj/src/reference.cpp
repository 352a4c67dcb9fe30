#include "fewdist/reference.hpp"

#include "fewdist/errors.hpp"

namespace fewdist::reference {

namespace {

// Forward elimination; returns the pivot count. If out != nullptr the
// reduction continues upward to full RREF written into *out.
std::size_t eliminate(RMatrix work, RMatrix* out) {
  const std::size_t n = work.rows();
  const std::size_t m = work.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && work(p, col).is_zero()) ++p;
    if (p == n) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m; ++j) std::swap(work(p, j), work(row, j));
    }
    const Rational inv = Rational(1) / work(row, col);
    for (std::size_t j = col; j < m; ++j) work(row, j) *= inv;
    for (std::size_t i = row + 1; i < n; ++i) {
      if (work(i, col).is_zero()) continue;
      const Rational f = work(i, col);
      for (std::size_t j = col; j < m; ++j) {
        work(i, j) -= f * work(row, j);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (out != nullptr) {
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      const std::size_t col = pivot_cols[r];
      for (std::size_t i = 0; i < r; ++i) {
        if (work(i, col).is_zero()) continue;
        const Rational f = work(i, col);
        for (std::size_t j = col; j < m; ++j) {
          work(i, j) -= f * work(r, j);
        }
      }
    }
    *out = std::move(work);
  }
  return pivot_cols.size();
}

}  // namespace

std::size_t rank(const RMatrix& m) { return eliminate(m, nullptr); }

Rational determinant(const RMatrix& m) {
  if (!m.is_square()) throw NonSquareError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RMatrix work = m;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && work(p, col).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(p, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Rational inv = Rational(1) / work(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (work(i, col).is_zero()) continue;
      const Rational f = work(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) {
        work(i, j) -= f * work(col, j);
      }
    }
  }
  return det;
}

RMatrix rref(const RMatrix& m) {
  RMatrix out;
  eliminate(m, &out);
  return out;
}

}  // namespace fewdist::reference
