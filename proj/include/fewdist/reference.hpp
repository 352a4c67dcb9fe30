#pragma once

#include "fewdist/matrix.hpp"

namespace fewdist::reference {

// Serial rational Gauss-Jordan elimination, kept deliberately simple and
// division-based. This is the independent route the production kernels
// (fraction-free, OpenMP) are checked against, and the baseline the
// benchmark compares them to. Do not "optimize" it to share code with
// fewdist::rank / fewdist::determinant.

/// Exact rank over the rationals.
std::size_t rank(const RMatrix& m);

/// Exact determinant of a square matrix over the rationals.
Rational determinant(const RMatrix& m);

/// Reduced row echelon form.
RMatrix rref(const RMatrix& m);

}  // namespace fewdist::reference
