#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "fewdist/clp.hpp"
#include "fewdist/geometry.hpp"
#include "fewdist/search.hpp"

namespace fewdist::io {

// All files are line-oriented key/value text. Numbers are exact: integers
// or "num/den"; floating point never appears. '#' starts a comment.

/// Throws ParseError on malformed input (including duplicate points,
/// reported as DuplicatePointsError).
PointSet parse_point_set(std::istream& in);
PointSet parse_point_set(const std::string& text);

/// Canonical form; parse(serialize(x)) == x and serializing again is
/// byte-identical.
std::string serialize_point_set(const PointSet& ps);

/// Sparse pair-polynomial file. `expected_vars` is the point dimension the
/// polynomial must match. A file with no terms is the zero polynomial.
PairPoly parse_pair_poly(std::istream& in, std::size_t expected_vars);
PairPoly parse_pair_poly(const std::string& text, std::size_t expected_vars);

struct ReportMeta {
  std::string tool;
  std::string input_digest;
  std::optional<std::string> timestamp;  // absent under --no-timestamp
};

std::string serialize_certificate(const Certificate& cert,
                                  const ReportMeta& meta);

/// Reads back every Certificate field from a machine report (meta lines
/// are ignored). Used to guarantee the report round-trips.
Certificate parse_certificate(const std::string& text);

std::string human_certificate(const Certificate& cert);

struct VerifyOutcome {
  std::size_t set_size = 0;
  std::size_t dimension = 0;
  unsigned s = 0;
  unsigned degree_bound = 0;
  RankBoundResult rank_result;
  InertiaBoundResult inertia_result;
  bool key_observation_ok = false;

  bool pass() const {
    return rank_result.pass && inertia_result.pass && key_observation_ok;
  }
};

std::string serialize_verify(const VerifyOutcome& v, const ReportMeta& meta);
std::string human_verify(const VerifyOutcome& v);

std::string dims_report(const PointSet& ps, unsigned s);

std::string search_report(const PointSet& ground, unsigned s,
                          const SearchResult& result);

/// Exit status for a finished verification: 0 when every check passed,
/// 1 when some check ran and failed.
int report_exit_code(bool all_checks_pass);

/// FNV-1a 64-bit digest, 16 lowercase hex characters.
std::string fnv1a64_hex(std::string_view data);

/// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp_now();

}  // namespace fewdist::io
