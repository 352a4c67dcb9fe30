#include "fewdist/clp.hpp"

#include <algorithm>
#include <atomic>

#include "fewdist/errors.hpp"

namespace fewdist {

namespace {

void require_degree(const PairPoly& p, unsigned s) {
  if (p.declared_degree_bound() > 2 * s + 1) {
    throw DegreeTooHighError(
        "degree bound " + std::to_string(p.declared_degree_bound()) +
        " exceeds 2s+1 = " + std::to_string(2 * s + 1));
  }
}

RMatrix symmetric_part(const RMatrix& m) {
  RMatrix out(m.rows(), m.cols());
  const Rational half(Int(1), Int(2));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = (m(i, j) + m(j, i)) * half;
  return out;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return out;
  do {
    out.push_back(c);
  } while (next_combination(c, n));
  return out;
}

}  // namespace

PairPoly PairPoly::sparse(std::vector<SparseTerm> terms,
                          unsigned declared_degree_bound) {
  for (const SparseTerm& t : terms) {
    if (t.x_part.exponents.size() != t.y_part.exponents.size()) {
      throw DimensionMismatchError("term with unequal x/y variable counts");
    }
    if (t.degree() > declared_degree_bound) {
      throw DegreeTooHighError("term of degree " + std::to_string(t.degree()) +
                               " above declared bound " +
                               std::to_string(declared_degree_bound));
    }
  }
  PairPoly p;
  p.form_ = std::move(terms);
  p.degree_bound_ = declared_degree_bound;
  return p;
}

PairPoly PairPoly::distance_product(DistanceSpectrum spectrum) {
  PairPoly p;
  p.degree_bound_ = static_cast<unsigned>(2 * spectrum.size());
  p.form_ = std::move(spectrum);
  return p;
}

bool PairPoly::is_distance_product() const {
  return std::holds_alternative<DistanceSpectrum>(form_);
}

bool PairPoly::is_symmetric() const {
  if (is_distance_product()) return true;
  // Net coefficient of every (alpha, beta) must match its mirror.
  const auto& terms = std::get<std::vector<SparseTerm>>(form_);
  std::vector<std::pair<std::pair<std::vector<unsigned>, std::vector<unsigned>>,
                        Rational>>
      net;
  for (const SparseTerm& t : terms) {
    auto key = std::make_pair(t.x_part.exponents, t.y_part.exponents);
    auto it = std::find_if(net.begin(), net.end(),
                           [&](const auto& e) { return e.first == key; });
    if (it == net.end()) {
      net.emplace_back(key, t.coeff);
    } else {
      it->second += t.coeff;
    }
  }
  for (const auto& [key, coeff] : net) {
    const auto mirror = std::make_pair(key.second, key.first);
    auto it = std::find_if(net.begin(), net.end(),
                           [&](const auto& e) { return e.first == mirror; });
    const Rational other = (it == net.end()) ? Rational(0) : it->second;
    if (coeff != other) return false;
  }
  return true;
}

const std::vector<SparseTerm>* PairPoly::sparse_terms() const {
  return std::get_if<std::vector<SparseTerm>>(&form_);
}

const DistanceSpectrum* PairPoly::spectrum() const {
  return std::get_if<DistanceSpectrum>(&form_);
}

Rational eval_pair(const PairPoly& p, const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatchError("pair points of different dimension");
  }
  if (const DistanceSpectrum* spec = p.spectrum()) {
    const Rational d2 = squared_distance(a, b);
    Rational acc(1);  // empty product
    for (const Rational& q : spec->values()) acc *= q - d2;
    return acc;
  }
  Rational acc;
  for (const SparseTerm& t : *p.sparse_terms()) {
    acc += t.coeff * eval_monomial(t.x_part, a) * eval_monomial(t.y_part, b);
  }
  return acc;
}

RMatrix build_clp_matrix(const PairPoly& p, const PointSet& a) {
  const std::size_t n = a.size();
  RMatrix m(n, n);
  const long nn = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (nn > 2)
  for (long i = 0; i < nn; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < n; ++j) {
      m(ii, j) = eval_pair(p, a[ii], a[j]);
    }
  }
  return m;
}

PairPoly distance_product_poly(const DistanceSpectrum& spectrum) {
  return PairPoly::distance_product(spectrum);
}

bool key_observation_check(const PairPoly& p, const PointSet& a, unsigned s) {
  require_degree(p, s);
  const OmegaBasis omega = omega_basis(a, s);
  if (omega.size() == 0) return true;  // vacuous
  const std::size_t n = a.size();
  const std::size_t k = omega.size();
  RMatrix basis(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(i, j) = omega.vectors[j][i];
  const RMatrix m = build_clp_matrix(p, a);
  const RMatrix gram = basis.transposed() * (m * basis);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!gram(i, j).is_zero()) return false;
  return true;
}

RankBoundResult check_rank_bound(const PairPoly& p, const PointSet& a,
                                 unsigned s) {
  require_degree(p, s);
  RankBoundResult r;
  r.clp_rank = rank(build_clp_matrix(p, a));
  r.bound = 2 * dim_s(a, s);
  r.pass = r.clp_rank <= r.bound;
  return r;
}

InertiaBoundResult check_inertia_bound(const PairPoly& p, const PointSet& a,
                                       unsigned s) {
  require_degree(p, s);
  RMatrix m = build_clp_matrix(p, a);
  InertiaBoundResult r;
  if (!m.is_symmetric()) {
    m = symmetric_part(m);
    r.symmetrized = true;
  }
  r.inertia = inertia(m);
  r.bound = dim_s(a, s);
  r.pass = std::max(r.inertia.positive, r.inertia.negative) <= r.bound;
  return r;
}

bool minor_vanishing_check(const PairPoly& p, const PointSet& a, unsigned s) {
  static constexpr std::size_t kMaxPoints = 7;
  if (a.size() > kMaxPoints) {
    throw SetTooLargeError("minor enumeration limited to 7 points");
  }
  require_degree(p, s);
  const std::size_t n = a.size();
  const std::size_t threshold = 2 * dim_s(a, s) + 1;
  if (threshold > n) return true;  // no minors of that order exist
  const RMatrix m = build_clp_matrix(p, a);
  std::atomic<bool> all_zero{true};
  for (std::size_t order = threshold; order <= n; ++order) {
    const auto subsets = combinations(n, order);
    const long total = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic) if (total > 1)
    for (long ri = 0; ri < total; ++ri) {
      if (!all_zero.load(std::memory_order_relaxed)) continue;
      for (const auto& cols : subsets) {
        const Rational det =
            determinant(m.submatrix(subsets[static_cast<std::size_t>(ri)],
                                    cols));
        if (!det.is_zero()) {
          all_zero.store(false, std::memory_order_relaxed);
          break;
        }
      }
    }
    if (!all_zero.load()) return false;
  }
  return all_zero.load();
}

bool Certificate::pass() const {
  if (!scalar_identity) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.pass; });
}

Certificate certify_bbs(const PointSet& a) {
  Certificate cert;
  cert.set_size = a.size();
  cert.dimension = a.dimension();
  cert.spectrum = distance_spectrum(a);
  cert.s = cert.spectrum.size();

  const PairPoly p = distance_product_poly(cert.spectrum);
  const RMatrix m = build_clp_matrix(p, a);

  // Structure check: M must be (prod of squared distances) * identity,
  // entry for entry.
  Rational scalar(1);
  for (const Rational& q : cert.spectrum.values()) scalar *= q;
  cert.scalar = scalar;
  cert.scalar_identity =
      (m == RMatrix::scaled_identity(a.size(), scalar));

  cert.clp_rank = rank(m);
  cert.clp_inertia = inertia(m);
  cert.dim_s_value = dim_s(a, static_cast<unsigned>(cert.s));
  cert.bbs_value = bbs_bound(cert.dimension, cert.s);
  cert.symmetrized = false;  // distance product is symmetric by construction

  const auto add_check = [&cert](std::string name, const Int& lhs,
                                 std::string relation, const Int& rhs) {
    const bool ok = relation == "=" ? lhs == rhs : lhs <= rhs;
    cert.checks.push_back(
        {std::move(name), lhs, std::move(relation), rhs, ok});
  };
  add_check("rank_le_two_dim_s", Int(cert.clp_rank), "<=",
            Int(2 * cert.dim_s_value));
  add_check("r_pos_le_dim_s", Int(cert.clp_inertia.positive), "<=",
            Int(cert.dim_s_value));
  add_check("r_neg_le_dim_s", Int(cert.clp_inertia.negative), "<=",
            Int(cert.dim_s_value));
  add_check("size_eq_r_pos", Int(cert.set_size), "=",
            Int(cert.clp_inertia.positive));
  add_check("size_le_bbs_bound", Int(cert.set_size), "<=", cert.bbs_value);
  return cert;
}

}  // namespace fewdist
