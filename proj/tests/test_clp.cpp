#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "fewdist/clp.hpp"
#include "fewdist/errors.hpp"
#include "fewdist/generators.hpp"
#include "fewdist/io.hpp"
#include "test_helpers.hpp"

using fewdist::Certificate;
using fewdist::DistanceSpectrum;
using fewdist::Inertia;
using fewdist::Int;
using fewdist::Monomial;
using fewdist::PairPoly;
using fewdist::PointSet;
using fewdist::Rational;
using fewdist::RMatrix;
using fewdist::SparseTerm;

namespace {
Rational Q(long num, long den = 1) { return Rational(Int(num), Int(den)); }

PointSet line012() { return PointSet(1, {{Q(0)}, {Q(1)}, {Q(2)}}); }

// p(x, y) = x*y in one variable per side.
PairPoly poly_xy() {
  return PairPoly::sparse({{Monomial::of({1}), Monomial::of({1}), Q(1)}}, 2);
}

// p(x, y) = (x - y)^2 = x^2 - 2xy + y^2; degree 2.
PairPoly poly_diff_squared() {
  return PairPoly::sparse({{Monomial::of({2}), Monomial::of({0}), Q(1)},
                           {Monomial::of({1}), Monomial::of({1}), Q(-2)},
                           {Monomial::of({0}), Monomial::of({2}), Q(1)}},
                          2);
}
}  // namespace

TEST_CASE("pair polynomial forms and degree bookkeeping") {
  const DistanceSpectrum spec({Q(2), Q(4)});
  const PairPoly dp = fewdist::distance_product_poly(spec);
  CHECK(dp.declared_degree_bound() == 4);
  CHECK(dp.is_distance_product());
  CHECK(dp.is_symmetric());

  const PairPoly empty = fewdist::distance_product_poly(DistanceSpectrum());
  CHECK(empty.declared_degree_bound() == 0);

  CHECK_THROWS_AS(
      PairPoly::sparse({{Monomial::of({2}), Monomial::of({1}), Q(1)}}, 2),
      fewdist::DegreeTooHighError);

  CHECK(poly_diff_squared().is_symmetric());
  const PairPoly asym =
      PairPoly::sparse({{Monomial::of({1}), Monomial::of({0}), Q(1)}}, 1);
  CHECK_FALSE(asym.is_symmetric());
}

TEST_CASE("pair evaluation") {
  const PairPoly dp = fewdist::distance_product_poly(
      DistanceSpectrum({Q(2), Q(4)}));
  CHECK(fewdist::eval_pair(dp, {Q(1), Q(0)}, {Q(0), Q(1)}) == Q(0));
  CHECK(fewdist::eval_pair(dp, {Q(1), Q(0)}, {Q(1), Q(0)}) == Q(8));

  const PairPoly xy = poly_xy();
  CHECK(fewdist::eval_pair(xy, {Q(2)}, {Q(3)}) == Q(6));
  CHECK_THROWS_AS(fewdist::eval_pair(xy, {Q(2)}, {Q(3), Q(4)}),
                  fewdist::DimensionMismatchError);

  // Empty product is the constant 1.
  const PairPoly one = fewdist::distance_product_poly(DistanceSpectrum());
  CHECK(fewdist::eval_pair(one, {Q(9)}, {Q(9)}) == Q(1));
}

TEST_CASE("matrix of the distance product is a positive scalar identity") {
  const PointSet cross = fewdist::cross_polytope(2);
  const PairPoly p =
      fewdist::distance_product_poly(fewdist::distance_spectrum(cross));
  const RMatrix m = fewdist::build_clp_matrix(p, cross);
  CHECK(m == RMatrix::scaled_identity(4, Q(8)));

  // Single point, empty spectrum: the 1x1 matrix [1].
  const PointSet single(3, {{Q(1), Q(2), Q(3)}});
  const PairPoly one = fewdist::distance_product_poly(DistanceSpectrum());
  CHECK(fewdist::build_clp_matrix(one, single) ==
        RMatrix::scaled_identity(1, Q(1)));
}

namespace {

// Test-side symbolic expansion of prod (q - ||x-y||^2) into sparse terms.
// Deliberately independent of the library's lazy distance-product form.
std::vector<SparseTerm> expand_distance_product(
    const std::vector<Rational>& spectrum, std::size_t d) {
  using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
  std::map<Key, Rational> acc;
  acc[{std::vector<unsigned>(d, 0), std::vector<unsigned>(d, 0)}] = Q(1);
  for (const Rational& q : spectrum) {
    // factor: q - sum_i (x_i^2 - 2 x_i y_i + y_i^2)
    std::map<Key, Rational> factor;
    factor[{std::vector<unsigned>(d, 0), std::vector<unsigned>(d, 0)}] = q;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<unsigned> two(d, 0), one(d, 0), zero(d, 0);
      two[i] = 2;
      one[i] = 1;
      factor[{two, zero}] += Q(-1);
      factor[{one, one}] += Q(2);
      factor[{zero, two}] += Q(-1);
    }
    std::map<Key, Rational> next;
    for (const auto& [ka, ca] : acc) {
      for (const auto& [kf, cf] : factor) {
        Key key = ka;
        for (std::size_t i = 0; i < d; ++i) {
          key.first[i] += kf.first[i];
          key.second[i] += kf.second[i];
        }
        next[key] += ca * cf;
      }
    }
    acc = std::move(next);
  }
  std::vector<SparseTerm> terms;
  for (const auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    terms.push_back({Monomial::of(key.first), Monomial::of(key.second), coeff});
  }
  return terms;
}

}  // namespace

TEST_CASE("expanded distance product matches the lazy form") {
  const PointSet cross = fewdist::cross_polytope(2);
  const DistanceSpectrum spec = fewdist::distance_spectrum(cross);
  const PairPoly lazy = fewdist::distance_product_poly(spec);
  const PairPoly expanded =
      PairPoly::sparse(expand_distance_product(spec.values(), 2), 4);
  CHECK(expanded.is_symmetric());

  // Same function on a sample of rational pairs.
  std::mt19937 rng(2711);
  std::uniform_int_distribution<long> num(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const fewdist::Point a{Q(num(rng), 3), Q(num(rng), 2)};
    const fewdist::Point b{Q(num(rng), 2), Q(num(rng), 5)};
    CHECK(fewdist::eval_pair(lazy, a, b) == fewdist::eval_pair(expanded, a, b));
  }

  // Same matrix, and the full check battery passes at s = 2.
  CHECK(fewdist::build_clp_matrix(expanded, cross) ==
        RMatrix::scaled_identity(4, Q(8)));
  CHECK(fewdist::check_rank_bound(expanded, cross, 2).pass);
  const auto inertia_result = fewdist::check_inertia_bound(expanded, cross, 2);
  CHECK(inertia_result.inertia == Inertia{4, 0, 0});
  CHECK_FALSE(inertia_result.symmetrized);
  CHECK(fewdist::key_observation_check(expanded, cross, 2));
}

TEST_CASE("expanded distance product survives the polynomial file format") {
  const DistanceSpectrum spec({Q(2), Q(4)});
  const auto terms = expand_distance_product(spec.values(), 2);
  std::ostringstream file;
  file << "vars 2\ndegree_bound 4\n";
  for (const SparseTerm& t : terms) {
    file << "term " << t.coeff.str();
    for (unsigned e : t.x_part.exponents) file << " " << e;
    for (unsigned e : t.y_part.exponents) file << " " << e;
    file << "\n";
  }
  const PairPoly parsed = fewdist::io::parse_pair_poly(file.str(), 2);
  const PointSet cross = fewdist::cross_polytope(2);
  CHECK(fewdist::build_clp_matrix(parsed, cross) ==
        RMatrix::scaled_identity(4, Q(8)));
  CHECK(fewdist::check_rank_bound(parsed, cross, 2).pass);
}

TEST_CASE("scalar identity structure holds on random rational point sets") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const std::size_t size = 1 + trial % 6;
    std::vector<fewdist::Point> pts;
    while (pts.size() < size) {
      fewdist::Point p(d);
      for (std::size_t c = 0; c < d; ++c) p[c] = Q(num(rng), den(rng));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
        pts.push_back(std::move(p));
      }
    }
    const PointSet a(d, pts);
    const DistanceSpectrum spec = fewdist::distance_spectrum(a);
    Rational scalar(1);
    for (const Rational& q : spec.values()) scalar *= q;
    const RMatrix m =
        fewdist::build_clp_matrix(fewdist::distance_product_poly(spec), a);
    CHECK(m == RMatrix::scaled_identity(a.size(), scalar));
    CHECK(fewdist::rank(m) == a.size());
    CHECK(fewdist::inertia(m) == Inertia{a.size(), 0, 0});
  }
}

TEST_CASE("matrix of a symmetric polynomial is symmetric") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const PointSet a = testutil::random_point_set(2, 5, -3, 3, rng);
    const PairPoly p = testutil::random_symmetric_poly(2, 1, 4, 5, rng);
    CHECK(fewdist::build_clp_matrix(p, a).is_symmetric());
  }
}

TEST_CASE("key observation on the line fixture") {
  // f = (1,-2,1) kills both sums in ((sum a f(a)) * (sum b g(b))).
  CHECK(fewdist::key_observation_check(poly_xy(), line012(), 1));

  // Omega trivial: vacuously true.
  CHECK(fewdist::key_observation_check(poly_xy(),
                                       fewdist::simplex_standard(2), 1));

  // Degree hypothesis enforced: bound 2 > 2*0+1.
  CHECK_THROWS_AS(fewdist::key_observation_check(poly_xy(), line012(), 0),
                  fewdist::DegreeTooHighError);
}

TEST_CASE("key observation holds on 300 random instances") {
  std::mt19937 rng(112233);
  int done = 0;
  while (done < 300) {
    const std::size_t d = 1 + done % 2;
    const unsigned s = done % 3;
    const PointSet a = testutil::random_point_set(d, 2 + done % 6, -3, 3, rng);
    const PairPoly p = testutil::random_symmetric_poly(d, s, 4, 5, rng);
    CHECK(fewdist::key_observation_check(p, a, s));
    ++done;
  }
}

TEST_CASE("rank bound fixtures") {
  const PointSet cross = fewdist::cross_polytope(2);
  const PairPoly p =
      fewdist::distance_product_poly(fewdist::distance_spectrum(cross));
  const auto r = fewdist::check_rank_bound(p, cross, 2);
  CHECK(r.clp_rank == 4);
  CHECK(r.bound == 8);
  CHECK(r.pass);

  const PointSet single(2, {{Q(0), Q(0)}});
  const PairPoly one = fewdist::distance_product_poly(DistanceSpectrum());
  const auto rs = fewdist::check_rank_bound(one, single, 0);
  CHECK(rs.clp_rank == 1);
  CHECK(rs.bound == 2);
  CHECK(rs.pass);
}

TEST_CASE("inertia bound fixtures") {
  const PointSet cross = fewdist::cross_polytope(2);
  const PairPoly p =
      fewdist::distance_product_poly(fewdist::distance_spectrum(cross));
  const auto r = fewdist::check_inertia_bound(p, cross, 2);
  CHECK(r.inertia == Inertia{4, 0, 0});
  CHECK(r.bound == 4);
  CHECK(r.pass);
  CHECK_FALSE(r.symmetrized);

  // Zero polynomial: all-zero matrix, inertia (0, 0, |A|).
  const PairPoly zero = PairPoly::sparse({}, 1);
  const auto rz = fewdist::check_inertia_bound(zero, fewdist::hypercube(2), 0);
  CHECK(rz.inertia == Inertia{0, 0, 4});
  CHECK(rz.pass);

  // Non-symmetric p goes through the symmetric part and says so.
  const PairPoly asym =
      PairPoly::sparse({{Monomial::of({1}), Monomial::of({0}), Q(1)}}, 1);
  const auto ra = fewdist::check_inertia_bound(asym, line012(), 0);
  CHECK(ra.symmetrized);
  CHECK(ra.pass);
}

TEST_CASE("rank and inertia bounds hold on random symmetric instances") {
  std::mt19937 rng(445566);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const unsigned s = trial % 3;
    const PointSet a = testutil::random_point_set(d, 1 + trial % 8, -3, 3,
                                                  rng);
    const PairPoly p = testutil::random_symmetric_poly(d, s, 4, 5, rng);
    const auto rank_result = fewdist::check_rank_bound(p, a, s);
    CHECK(rank_result.pass);
    const auto inertia_result = fewdist::check_inertia_bound(p, a, s);
    CHECK(inertia_result.pass);
    CHECK_FALSE(inertia_result.symmetrized);
    CHECK(inertia_result.inertia.rank() == rank_result.clp_rank);
  }
}

TEST_CASE("minor vanishing") {
  // Constant polynomial on three collinear points: the all-ones matrix,
  // every 3x3 minor (there is one) vanishes.
  const PairPoly one =
      PairPoly::sparse({{Monomial::of({0}), Monomial::of({0}), Q(1)}}, 0);
  CHECK(fewdist::minor_vanishing_check(one, line012(), 0));

  // 2*dim_s + 1 above |A|: vacuously true.
  CHECK(fewdist::minor_vanishing_check(poly_xy(), line012(), 1));

  const PointSet big = fewdist::hypercube(3);
  CHECK_THROWS_AS(fewdist::minor_vanishing_check(one, big, 0),
                  fewdist::SetTooLargeError);

  std::mt19937 rng(9090);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 2;
    const unsigned s = trial % 2;
    const PointSet a = testutil::random_point_set(d, 2 + trial % 5, -2, 2,
                                                  rng);
    const PairPoly p = testutil::random_symmetric_poly(d, s, 3, 4, rng);
    CHECK(fewdist::minor_vanishing_check(p, a, s));
  }
}

TEST_CASE("degree hypothesis is sharp: a degree 2s+2 counterexample") {
  // s = 0 on {0,1,2}: p = (x-y)^2 has matrix [[0,1,4],[1,0,1],[4,1,0]]
  // of full rank 3, while 2*dim_0 = 2. One degree too many breaks the
  // rank bound, so the suite cannot pass vacuously.
  const PointSet a = line012();
  const PairPoly p = poly_diff_squared();
  const RMatrix m = fewdist::build_clp_matrix(p, a);
  CHECK(m == RMatrix::from_rows({{Q(0), Q(1), Q(4)},
                                 {Q(1), Q(0), Q(1)},
                                 {Q(4), Q(1), Q(0)}}));
  CHECK(fewdist::rank(m) == 3);
  CHECK(fewdist::dim_s(a, 0) == 1);
  CHECK(fewdist::rank(m) > 2 * fewdist::dim_s(a, 0));
  // The inertia bound fails too: eigenvalues are -4 and 2 +- sqrt(6).
  CHECK(fewdist::inertia(m) == Inertia{1, 2, 0});

  // The guarded entry point refuses the degree outright.
  CHECK_THROWS_AS(fewdist::check_rank_bound(p, a, 0),
                  fewdist::DegreeTooHighError);
}

TEST_CASE("certificates for the classical configurations") {
  const Certificate simplex = fewdist::certify_bbs(fewdist::simplex_standard(4));
  CHECK(simplex.set_size == 4);
  CHECK(simplex.s == 1);
  CHECK(simplex.clp_inertia == Inertia{4, 0, 0});
  CHECK(simplex.dim_s_value == 4);
  CHECK(simplex.bbs_value == 5);
  CHECK(simplex.pass());

  const Certificate cross = fewdist::certify_bbs(fewdist::cross_polytope(2));
  CHECK(cross.set_size == 4);
  CHECK(cross.s == 2);
  CHECK(cross.clp_rank == 4);
  CHECK(cross.clp_inertia.positive == 4);
  CHECK(cross.dim_s_value == 4);
  CHECK(cross.bbs_value == 6);
  CHECK(cross.scalar_identity);
  CHECK(cross.scalar == Q(8));
  CHECK(cross.pass());

  const Certificate johnson = fewdist::certify_bbs(fewdist::johnson(4, 2));
  CHECK(johnson.set_size == 6);
  CHECK(johnson.s == 2);
  CHECK(johnson.bbs_value == 15);
  CHECK(johnson.pass());

  // Singleton: s = 0, bound C(d, 0) = 1.
  const Certificate single = fewdist::certify_bbs(PointSet(2, {{Q(1), Q(2)}}));
  CHECK(single.s == 0);
  CHECK(single.bbs_value == 1);
  CHECK(single.scalar == Q(1));
  CHECK(single.pass());
}

TEST_CASE("certificate checks are internally consistent") {
  const Certificate cert = fewdist::certify_bbs(fewdist::cross_polytope(3));
  CHECK(cert.clp_inertia.rank() == cert.clp_rank);
  REQUIRE(cert.checks.size() == 5);
  CHECK(cert.checks[0].name == "rank_le_two_dim_s");
  CHECK(cert.checks[0].lhs == Int(cert.clp_rank));
  CHECK(cert.checks[0].rhs == Int(2 * cert.dim_s_value));
  CHECK(cert.checks[1].lhs == Int(cert.clp_inertia.positive));
  CHECK(cert.checks[2].lhs == Int(cert.clp_inertia.negative));
  CHECK(cert.checks[3].relation == "=");
  CHECK(cert.checks[3].lhs == Int(cert.set_size));
  CHECK(cert.checks[3].rhs == Int(cert.clp_inertia.positive));
  CHECK(cert.checks[4].rhs == cert.bbs_value);
  for (const auto& check : cert.checks) CHECK(check.pass);
}
