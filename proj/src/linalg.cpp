#include "fewdist/linalg.hpp"

#include <gmpxx.h>

#include <utility>

#include "fewdist/errors.hpp"

namespace fewdist {

namespace {

// Integer elimination workspace: the input matrix with every row scaled by
// the (positive) lcm of its denominators. Row scaling changes neither rank
// nor nullspace; the determinant is recovered by dividing the scales back
// out.
struct ZWorkspace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> e;
  Int scale_product = 1;

  Int& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
};

ZWorkspace to_integer_rows(const RMatrix& m) {
  ZWorkspace w;
  w.rows = m.rows();
  w.cols = m.cols();
  w.e.resize(w.rows * w.cols);
  for (std::size_t i = 0; i < w.rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < w.cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m(i, j).denominator().get_mpz_t());
    }
    for (std::size_t j = 0; j < w.cols; ++j) {
      const Rational& x = m(i, j);
      w.at(i, j) = x.numerator() * (lcm / x.denominator());
    }
    w.scale_product *= lcm;
  }
  return w;
}

Int divide_exact(const Int& num, const Int& den) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (sgn(r) != 0) {
    throw InternalError("fraction-free elimination: inexact division");
  }
  return q;
}

// Bareiss elimination with full pivot search. Pivot rule: first nonzero
// entry in a row-major scan of the active submatrix. Returns the pivot
// count; when det_out is given also the determinant of the scaled matrix
// (zero if the matrix is rank deficient).
std::size_t bareiss(ZWorkspace& w, Int* det_out) {
  const std::size_t n = w.rows;
  const std::size_t m = w.cols;
  Int prev = 1;
  int sign = 1;
  std::size_t k = 0;
  for (; k < n && k < m; ++k) {
    std::size_t pi = n, pj = m;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = k; j < m; ++j) {
        if (sgn(w.at(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;
    if (pi != k) {
      for (std::size_t j = 0; j < m; ++j) std::swap(w.at(pi, j), w.at(k, j));
      sign = -sign;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, pj), w.at(i, k));
      sign = -sign;
    }
    const long lo = static_cast<long>(k) + 1;
    const long hi = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (hi - lo > 2)
    for (long i = lo; i < hi; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      for (std::size_t j = k + 1; j < m; ++j) {
        w.at(ii, j) = divide_exact(
            w.at(k, k) * w.at(ii, j) - w.at(ii, k) * w.at(k, j), prev);
      }
      w.at(ii, k) = 0;
    }
    prev = w.at(k, k);
  }
  if (det_out != nullptr) {
    *det_out = (k == n && n == m) ? Int(sign * prev) : Int(0);
  }
  return k;
}

void sym_swap(RMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
  for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
}

// Column-normalized rational RREF used only for nullspace extraction.
// Row swaps only, so the variable order is preserved.
std::vector<std::size_t> rref_in_place(RMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m; ++j) std::swap(a(p, j), a(row, j));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = col; j < m; ++j) a(row, j) *= inv;
    const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (nn > 4)
    for (long i = 0; i < nn; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      if (ii == row || a(ii, col).is_zero()) continue;
      const Rational f = a(ii, col);
      for (std::size_t j = col; j < m; ++j) a(ii, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

// Scale to integer entries with content 1 and first nonzero entry positive.
void normalize_primitive(std::vector<Rational>& v) {
  Int lcm = 1;
  for (const Rational& x : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  }
  std::vector<Int> ints(v.size());
  Int content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].numerator() * (lcm / v[i].denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (sgn(content) == 0) return;  // zero vector, nothing to normalize
  int lead = 0;
  for (const Int& x : ints) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) content = -content;
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = Rational(ints[i] / content);
  }
}

}  // namespace

std::size_t rank(const RMatrix& m) {
  ZWorkspace w = to_integer_rows(m);
  return bareiss(w, nullptr);
}

Rational determinant(const RMatrix& m) {
  if (!m.is_square()) throw NonSquareError("determinant of non-square matrix");
  ZWorkspace w = to_integer_rows(m);
  Int det;
  bareiss(w, &det);
  return Rational(det, w.scale_product);
}

std::vector<std::vector<Rational>> nullspace(const RMatrix& m) {
  RMatrix a = m;
  const std::vector<std::size_t> pivot_cols = rref_in_place(a);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  basis.reserve(cols - pivot_cols.size());
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      v[pivot_cols[r]] = -a(r, f);
    }
    normalize_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia inertia(const RMatrix& m) {
  if (!m.is_square()) throw NonSquareError("inertia of non-square matrix");
  if (!m.is_symmetric()) throw NonSymmetricError("inertia of non-symmetric matrix");
  RMatrix a = m;
  const std::size_t n = a.rows();
  Inertia result;
  std::size_t k = 0;
  while (k < n) {
    // First nonzero diagonal entry of the active block, if any.
    std::size_t dp = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!a(i, i).is_zero()) {
        dp = i;
        break;
      }
    }
    if (dp != n) {
      sym_swap(a, dp, k);
      const Rational& d = a(k, k);
      if (d.sign() > 0) {
        ++result.positive;
      } else {
        ++result.negative;
      }
      const long lo = static_cast<long>(k) + 1;
      const long hi = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (hi - lo > 4)
      for (long i = lo; i < hi; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (a(ii, k).is_zero()) continue;
        const Rational f = a(ii, k) / d;
        for (std::size_t j = k + 1; j < n; ++j) {
          a(ii, j) -= f * a(k, j);
        }
      }
      ++k;
      continue;
    }
    // Whole diagonal is zero: first nonzero off-diagonal entry in a
    // row-major scan of the upper triangle, if any.
    std::size_t bi = n, bj = n;
    for (std::size_t i = k; i < n && bi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!a(i, j).is_zero()) {
          bi = i;
          bj = j;
          break;
        }
      }
    }
    if (bi == n) {
      result.zero += n - k;  // remaining block is identically zero
      break;
    }
    sym_swap(a, bi, k);
    sym_swap(a, bj, k + 1);
    // Block pivot [[0, c], [c, 0]] contributes one direction of each sign.
    const Rational c = a(k, k + 1);
    ++result.positive;
    ++result.negative;
    const long lo = static_cast<long>(k) + 2;
    const long hi = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (hi - lo > 4)
    for (long i = lo; i < hi; ++i) {
      const std::size_t ii = static_cast<std::size_t>(i);
      const Rational u = a(ii, k) / c;
      const Rational v = a(ii, k + 1) / c;
      if (u.is_zero() && v.is_zero()) continue;
      for (std::size_t j = k + 2; j < n; ++j) {
        a(ii, j) -= u * a(k + 1, j) + v * a(k, j);
      }
    }
    k += 2;
  }
  return result;
}

}  // namespace fewdist
