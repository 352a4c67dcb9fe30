#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "fewdist/geometry.hpp"
#include "fewdist/linalg.hpp"
#include "fewdist/polyspace.hpp"

namespace fewdist {

/// One term c * x^alpha * y^beta of a pair polynomial.
struct SparseTerm {
  Monomial x_part;
  Monomial y_part;
  Rational coeff;

  unsigned degree() const {
    return x_part.total_degree + y_part.total_degree;
  }

  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

/// Polynomial p(x, y) in two groups of d variables with a certified total
/// degree bound. Two concrete forms:
///   - sparse monomial list (degree bound checked term by term);
///   - distance product prod_{q in spectrum} (q - ||x-y||^2), degree bound
///     2 * |spectrum|, never expanded.
class PairPoly {
public:
  /// Throws DegreeTooHighError if some term exceeds the declared bound.
  static PairPoly sparse(std::vector<SparseTerm> terms,
                         unsigned declared_degree_bound);

  static PairPoly distance_product(DistanceSpectrum spectrum);

  unsigned declared_degree_bound() const { return degree_bound_; }
  bool is_distance_product() const;

  /// Syntactic symmetry in (x, y): a distance product always is; a sparse
  /// polynomial is when its term list is invariant under swapping the two
  /// variable groups.
  bool is_symmetric() const;

  const std::vector<SparseTerm>* sparse_terms() const;
  const DistanceSpectrum* spectrum() const;

private:
  PairPoly() = default;

  std::variant<std::vector<SparseTerm>, DistanceSpectrum> form_;
  unsigned degree_bound_ = 0;
};

/// p(a, b), exact. Throws DimensionMismatchError.
Rational eval_pair(const PairPoly& p, const Point& a, const Point& b);

/// The |A| x |A| matrix with entry (i, j) = p(A_i, A_j), rows and columns
/// in A's point order.
RMatrix build_clp_matrix(const PairPoly& p, const PointSet& a);

/// The pair polynomial prod_{q in spectrum} (q - ||x-y||^2). On an
/// s-distance set with this spectrum its matrix is (prod q) * identity.
PairPoly distance_product_poly(const DistanceSpectrum& spectrum);

/// True iff f^T M_{p,A} g = 0 for every ordered pair (f, g) of vectors of
/// the omega basis for degree s. This holds for every p of degree at most
/// 2s+1; a false return is an implementation bug, never a property of the
/// input. Throws DegreeTooHighError when the degree hypothesis fails.
bool key_observation_check(const PairPoly& p, const PointSet& a, unsigned s);

struct RankBoundResult {
  std::size_t clp_rank = 0;
  std::size_t bound = 0;  // 2 * dim_s(A)
  bool pass = false;
};

/// rank(M_{p,A}) <= 2 dim_s(A) for deg(p) <= 2s+1.
RankBoundResult check_rank_bound(const PairPoly& p, const PointSet& a,
                                 unsigned s);

struct InertiaBoundResult {
  Inertia inertia;
  std::size_t bound = 0;  // dim_s(A)
  bool pass = false;
  bool symmetrized = false;
};

/// max(r+, r-) <= dim_s(A) for deg(p) <= 2s+1. The quadratic form only
/// sees the symmetric part, so a non-symmetric p is replaced by
/// (M + M^T)/2 and the result notes that symmetrization happened.
InertiaBoundResult check_inertia_bound(const PairPoly& p, const PointSet& a,
                                       unsigned s);

/// True iff every square minor of M_{p,A} of order >= 2 dim_s(A) + 1 has
/// determinant exactly zero (vacuously true when no such minor exists).
/// Exhaustive enumeration; |A| <= 7 or SetTooLargeError.
bool minor_vanishing_check(const PairPoly& p, const PointSet& a, unsigned s);

struct CertificateCheck {
  std::string name;
  Int lhs;
  std::string relation;  // "<=" or "="
  Int rhs;
  bool pass = false;

  friend bool operator==(const CertificateCheck&,
                         const CertificateCheck&) = default;
};

/// Full audit record of one bound verification on a concrete point set.
struct Certificate {
  std::size_t set_size = 0;
  std::size_t dimension = 0;
  std::size_t s = 0;
  DistanceSpectrum spectrum;
  std::size_t clp_rank = 0;
  Inertia clp_inertia;
  std::size_t dim_s_value = 0;
  Int bbs_value;
  bool scalar_identity = false;  // M equals scalar * I, checked entrywise
  Rational scalar;
  bool symmetrized = false;
  std::vector<CertificateCheck> checks;

  bool pass() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Runs the whole verification chain on A with the distance-product
/// polynomial of its own spectrum: builds M, takes rank and inertia,
/// computes dim_s and C(d+s,s), and records every inequality along with
/// the scalar-identity structure check.
Certificate certify_bbs(const PointSet& a);

}  // namespace fewdist
