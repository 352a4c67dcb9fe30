#pragma once

#include <cstddef>
#include <vector>

#include "fewdist/geometry.hpp"
#include "fewdist/matrix.hpp"

namespace fewdist {

/// Monomial in a fixed number of variables; total_degree is always the sum
/// of the exponents.
struct Monomial {
  std::vector<unsigned> exponents;
  unsigned total_degree = 0;

  static Monomial of(std::vector<unsigned> exponents);

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// All monomials of total degree <= s in graded-lexicographic order
/// (degree ascending; within a degree, earlier variables first). The list
/// has exactly C(num_vars + s, s) entries and fixes the column order of
/// every evaluation matrix.
std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars,
                                             unsigned s);

/// point^monomial, exact.
Rational eval_monomial(const Monomial& m, const Point& p);

/// |A| x C(d+s,s) matrix of monomial values: row per point, column per
/// monomial in the fixed order.
RMatrix evaluation_matrix(const PointSet& a, unsigned s);

/// Dimension of the space of polynomials of degree <= s restricted to A as
/// functions, i.e. the rank of the evaluation matrix. At most
/// min(|A|, C(d+s,s)).
std::size_t dim_s(const PointSet& a, unsigned s);

/// Basis of the space of functions A -> Q orthogonal to every polynomial
/// of degree <= s, as coordinate vectors in A's point order. Each basis
/// vector is a primitive integer vector; the count is |A| - dim_s(A).
struct OmegaBasis {
  std::vector<std::vector<Rational>> vectors;

  std::size_t size() const { return vectors.size(); }
};

OmegaBasis omega_basis(const PointSet& a, unsigned s);

}  // namespace fewdist
