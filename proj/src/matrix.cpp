#include "fewdist/matrix.hpp"

#include "fewdist/errors.hpp"

namespace fewdist {

RMatrix RMatrix::identity(std::size_t n) {
  return scaled_identity(n, Rational(1));
}

RMatrix RMatrix::scaled_identity(std::size_t n, const Rational& c) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

RMatrix RMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatchError("ragged initializer");
    std::size_t j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RMatrix RMatrix::transposed() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RMatrix RMatrix::submatrix(const std::vector<std::size_t>& row_ids,
                           const std::vector<std::size_t>& col_ids) const {
  RMatrix m(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j)
      m(i, j) = (*this)(row_ids[i], col_ids[j]);
  return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatchError("matrix product shape mismatch");
  }
  RMatrix c(a.rows(), b.cols());
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) if (n > 8)
  for (long i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc += a(static_cast<std::size_t>(i), k) * b(k, j);
      }
      c(static_cast<std::size_t>(i), j) = acc;
    }
  }
  return c;
}

std::vector<Rational> operator*(const RMatrix& m,
                                const std::vector<Rational>& v) {
  if (m.cols() != v.size()) {
    throw DimensionMismatchError("matrix-vector shape mismatch");
  }
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

}  // namespace fewdist
