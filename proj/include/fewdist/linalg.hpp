#pragma once

#include <cstddef>
#include <vector>

#include "fewdist/matrix.hpp"

namespace fewdist {

/// Signature of a real symmetric form: counts of positive, negative and
/// zero inertia directions. positive + negative equals the matrix rank,
/// and the three parts sum to the order.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t order() const { return positive + negative + zero; }
  std::size_t rank() const { return positive + negative; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact rank over the rationals.
///
/// Fraction-free (Bareiss) elimination on a row-scaled integer copy of the
/// matrix, with full pivot search. The pivot rule is fixed — first nonzero
/// entry in a row-major scan of the active submatrix — so identical inputs
/// always take identical elimination paths. The per-step row updates run
/// under OpenMP; exact arithmetic makes the result independent of the
/// thread count.
std::size_t rank(const RMatrix& m);

/// Exact determinant of a square matrix, same kernel as rank().
Rational determinant(const RMatrix& m);

/// Basis of { v : m v = 0 }. Basis size is cols − rank; each vector is
/// scaled to integer entries with content 1 and first nonzero entry
/// positive, so the output is canonical.
std::vector<std::vector<Rational>> nullspace(const RMatrix& m);

/// Inertia of a symmetric rational matrix by recursive symmetric pivoting.
///
/// A nonzero diagonal pivot contributes its sign and is eliminated
/// symmetrically. When the whole remaining diagonal is zero but some
/// off-diagonal entry a_ij is not, the 2x2 block [[0,a_ij],[a_ij,0]]
/// contributes exactly one positive and one negative direction and both
/// rows/columns are eliminated. Whatever remains once no pivot exists is
/// the zero part. Throws NonSquareError / NonSymmetricError.
Inertia inertia(const RMatrix& m);

}  // namespace fewdist
