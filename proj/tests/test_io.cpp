#include <doctest.h>

#include <random>

#include "fewdist/clp.hpp"
#include "fewdist/errors.hpp"
#include "fewdist/generators.hpp"
#include "fewdist/io.hpp"
#include "test_helpers.hpp"

using fewdist::Certificate;
using fewdist::Int;
using fewdist::PointSet;
using fewdist::Rational;

namespace {
Rational Q(long num, long den = 1) { return Rational(Int(num), Int(den)); }
}  // namespace

TEST_CASE("point set file round trip") {
  const PointSet cross = fewdist::cross_polytope(2);
  const std::string text = fewdist::io::serialize_point_set(cross);
  const PointSet parsed = fewdist::io::parse_point_set(text);
  CHECK(parsed == cross);
  CHECK(fewdist::io::serialize_point_set(parsed) == text);  // idempotent

  std::mt19937 rng(1001);
  for (int trial = 0; trial < 25; ++trial) {
    const PointSet a = testutil::random_point_set(3, 6, -9, 9, rng);
    CHECK(fewdist::io::parse_point_set(fewdist::io::serialize_point_set(a)) ==
          a);
  }
}

TEST_CASE("point set parser accepts comments and rational coordinates") {
  const std::string text =
      "# hand written\n"
      "dimension 2\n"
      "\n"
      "point 1/2 0   # first\n"
      "point 0 -1/3\n";
  const PointSet ps = fewdist::io::parse_point_set(text);
  CHECK(ps.size() == 2);
  CHECK(ps[0] == fewdist::Point{Q(1, 2), Q(0)});
  CHECK(ps[1] == fewdist::Point{Q(0), Q(-1, 3)});
}

TEST_CASE("point set parser rejects malformed input") {
  using fewdist::io::parse_point_set;
  CHECK_THROWS_AS(parse_point_set("point 1 2\n"), fewdist::ParseError);
  CHECK_THROWS_AS(parse_point_set("dimension 2\npoint 1\n"),
                  fewdist::ParseError);
  CHECK_THROWS_AS(parse_point_set("dimension 2\ncount 3\npoint 1 2\n"),
                  fewdist::ParseError);
  CHECK_THROWS_AS(parse_point_set("dimension 1\npoint 0.5\n"),
                  fewdist::ParseError);
  CHECK_THROWS_AS(parse_point_set("dimension 1\npoint 1/0\n"),
                  fewdist::ParseError);
  CHECK_THROWS_AS(parse_point_set("dimension 2\n"), fewdist::ParseError);
  // Duplicate points keep their own error type (CLI exit code 2 either way).
  CHECK_THROWS_AS(parse_point_set("dimension 1\npoint 3\npoint 3\n"),
                  fewdist::DuplicatePointsError);
}

TEST_CASE("pair polynomial files") {
  const std::string text =
      "format fewdist-pairpoly 1\n"
      "vars 1\n"
      "degree_bound 2\n"
      "term 1 2 0\n"
      "term -2 1 1\n"
      "term 1 0 2\n";
  const fewdist::PairPoly p = fewdist::io::parse_pair_poly(text, 1);
  CHECK(p.declared_degree_bound() == 2);
  REQUIRE(p.sparse_terms() != nullptr);
  CHECK(p.sparse_terms()->size() == 3);
  CHECK(p.is_symmetric());
  // (x - y)^2 at (3, 1)
  CHECK(fewdist::eval_pair(p, {Q(3)}, {Q(1)}) == Q(4));

  // Declared bound below an actual term degree is refused.
  const std::string lying =
      "vars 1\ndegree_bound 1\nterm 1 2 0\n";
  CHECK_THROWS_AS(fewdist::io::parse_pair_poly(lying, 1),
                  fewdist::DegreeTooHighError);

  // Variable count must match the point set dimension.
  CHECK_THROWS_AS(fewdist::io::parse_pair_poly(text, 2), fewdist::ParseError);

  // No terms: the zero polynomial.
  const fewdist::PairPoly zero = fewdist::io::parse_pair_poly("vars 3\n", 3);
  CHECK(zero.sparse_terms()->empty());
  CHECK(fewdist::eval_pair(zero, {Q(1), Q(2), Q(3)}, {Q(4), Q(5), Q(6)}) ==
        Q(0));
}

TEST_CASE("certificate reports round trip") {
  const Certificate cert = fewdist::certify_bbs(fewdist::cross_polytope(2));
  fewdist::io::ReportMeta meta;
  meta.tool = "fewdist test";
  meta.input_digest = "0123456789abcdef";
  SUBCASE("without timestamp") {
    const std::string text = fewdist::io::serialize_certificate(cert, meta);
    CHECK(fewdist::io::parse_certificate(text) == cert);
  }
  SUBCASE("with timestamp") {
    meta.timestamp = "2026-08-08T00:00:00Z";
    const std::string text = fewdist::io::serialize_certificate(cert, meta);
    CHECK(fewdist::io::parse_certificate(text) == cert);
  }
}

TEST_CASE("certificate serialization is stable") {
  const Certificate cert = fewdist::certify_bbs(fewdist::cross_polytope(2));
  fewdist::io::ReportMeta meta;
  meta.tool = "fewdist 0.1.0";
  meta.input_digest = fewdist::io::fnv1a64_hex(
      fewdist::io::serialize_point_set(fewdist::cross_polytope(2)));
  const std::string a = fewdist::io::serialize_certificate(cert, meta);
  const std::string b = fewdist::io::serialize_certificate(
      fewdist::certify_bbs(fewdist::cross_polytope(2)), meta);
  CHECK(a == b);
  CHECK(a.find("set_size 4") != std::string::npos);
  CHECK(a.find("spectrum 2 4") != std::string::npos);
  CHECK(a.find("scalar 8") != std::string::npos);
  CHECK(a.find("bbs_bound 6") != std::string::npos);
  CHECK(a.find("result pass") != std::string::npos);
  CHECK(a.find("timestamp") == std::string::npos);
}

TEST_CASE("human certificate names the outcome") {
  const Certificate cert = fewdist::certify_bbs(fewdist::simplex_standard(3));
  const std::string text = fewdist::io::human_certificate(cert);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  CHECK(fewdist::io::report_exit_code(true) == 0);
  CHECK(fewdist::io::report_exit_code(false) == 1);

  // A certificate with a failing check maps to 1; this is the alarm
  // channel for implementation bugs, so it can only be staged by hand.
  Certificate cert = fewdist::certify_bbs(fewdist::cross_polytope(2));
  CHECK(fewdist::io::report_exit_code(cert.pass()) == 0);
  cert.checks[0].pass = false;
  CHECK_FALSE(cert.pass());
  CHECK(fewdist::io::report_exit_code(cert.pass()) == 1);
}

TEST_CASE("fnv1a64 known values") {
  CHECK(fewdist::io::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fewdist::io::fnv1a64_hex("a") == "af63dc4c8601ec8c");
  CHECK(fewdist::io::fnv1a64_hex("fewdist") !=
        fewdist::io::fnv1a64_hex("fewdisT"));
}

TEST_CASE("dims and search reports carry the agreed keys") {
  const PointSet line(1, {{Q(0)}, {Q(1)}, {Q(2)}});
  const std::string dims = fewdist::io::dims_report(line, 1);
  CHECK(dims.find("dim_s 2") != std::string::npos);
  CHECK(dims.find("bound 2") != std::string::npos);
  CHECK(dims.find("omega_dim 1") != std::string::npos);

  const auto result = fewdist::max_s_distance_subset(fewdist::hypercube(2), 1);
  const std::string search =
      fewdist::io::search_report(fewdist::hypercube(2), 1, result);
  CHECK(search.find("best_size 2") != std::string::npos);
  CHECK(search.find("exhaustive true") != std::string::npos);
}
