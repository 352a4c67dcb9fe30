#include "fewdist/polyspace.hpp"

#include <numeric>

#include "fewdist/errors.hpp"
#include "fewdist/linalg.hpp"

namespace fewdist {

namespace {

void emit_degree(std::size_t num_vars, unsigned degree, std::size_t var,
                 std::vector<unsigned>& current,
                 std::vector<Monomial>& out) {
  if (var + 1 == num_vars) {
    current[var] = degree;
    out.push_back(Monomial::of(current));
    current[var] = 0;
    return;
  }
  for (unsigned e = degree; e + 1 != 0; --e) {
    current[var] = e;
    emit_degree(num_vars, degree - e, var + 1, current, out);
  }
  current[var] = 0;
}

}  // namespace

Monomial Monomial::of(std::vector<unsigned> exponents) {
  Monomial m;
  m.total_degree = std::accumulate(exponents.begin(), exponents.end(), 0u);
  m.exponents = std::move(exponents);
  return m;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars,
                                             unsigned s) {
  if (num_vars == 0) throw BadParamsError("need at least one variable");
  std::vector<Monomial> out;
  std::vector<unsigned> current(num_vars, 0);
  for (unsigned degree = 0; degree <= s; ++degree) {
    emit_degree(num_vars, degree, 0, current, out);
  }
  return out;
}

Rational eval_monomial(const Monomial& m, const Point& p) {
  if (m.exponents.size() != p.size()) {
    throw DimensionMismatchError("monomial/point variable count mismatch");
  }
  Rational acc(1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    acc *= p[i].pow(m.exponents[i]);
  }
  return acc;
}

RMatrix evaluation_matrix(const PointSet& a, unsigned s) {
  const std::vector<Monomial> basis = monomials_up_to_degree(a.dimension(), s);
  RMatrix e(a.size(), basis.size());
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static) if (n > 4)
  for (long i = 0; i < n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      e(ii, j) = eval_monomial(basis[j], a[ii]);
    }
  }
  return e;
}

std::size_t dim_s(const PointSet& a, unsigned s) {
  return rank(evaluation_matrix(a, s));
}

OmegaBasis omega_basis(const PointSet& a, unsigned s) {
  OmegaBasis basis;
  basis.vectors = nullspace(evaluation_matrix(a, s).transposed());
  return basis;
}

}  // namespace fewdist
