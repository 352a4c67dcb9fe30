#include "fewdist/io.hpp"

#include <cinttypes>
#include <ctime>
#include <sstream>

#include "fewdist/errors.hpp"

namespace fewdist::io {

namespace {

constexpr std::string_view kPointSetFormat = "fewdist-pointset 1";
constexpr std::string_view kPairPolyFormat = "fewdist-pairpoly 1";
constexpr std::string_view kCertificateFormat = "fewdist-certificate 1";

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

std::vector<std::vector<std::string>> content_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = tokenize(line);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

std::size_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() ||
      tok.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("bad ") + what + ": " + tok);
  }
  return std::stoull(tok);
}

bool parse_flag(const std::string& tok, const char* what) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  throw ParseError(std::string("bad ") + what + ": " + tok);
}

}  // namespace

PointSet parse_point_set(std::istream& in) {
  const auto lines = content_lines(in);
  std::size_t i = 0;
  if (i < lines.size() && lines[i][0] == "format") {
    if (lines[i].size() != 3 ||
        lines[i][1] + " " + lines[i][2] != kPointSetFormat) {
      throw ParseError("unsupported point set format");
    }
    ++i;
  }
  if (i >= lines.size() || lines[i][0] != "dimension" ||
      lines[i].size() != 2) {
    throw ParseError("expected 'dimension <d>'");
  }
  const std::size_t dimension = parse_count(lines[i][1], "dimension");
  ++i;
  std::optional<std::size_t> declared_count;
  if (i < lines.size() && lines[i][0] == "count") {
    if (lines[i].size() != 2) throw ParseError("expected 'count <n>'");
    declared_count = parse_count(lines[i][1], "count");
    ++i;
  }
  std::vector<Point> points;
  for (; i < lines.size(); ++i) {
    if (lines[i][0] != "point") {
      throw ParseError("unexpected line starting with '" + lines[i][0] + "'");
    }
    if (lines[i].size() != dimension + 1) {
      throw ParseError("point with " + std::to_string(lines[i].size() - 1) +
                       " coordinates, expected " + std::to_string(dimension));
    }
    Point p;
    p.reserve(dimension);
    for (std::size_t j = 1; j < lines[i].size(); ++j) {
      p.push_back(Rational::from_string(lines[i][j]));
    }
    points.push_back(std::move(p));
  }
  if (declared_count && *declared_count != points.size()) {
    throw ParseError("count says " + std::to_string(*declared_count) +
                     " but file has " + std::to_string(points.size()) +
                     " points");
  }
  try {
    return PointSet(dimension, std::move(points));
  } catch (const BadParamsError& e) {
    throw ParseError(e.what());
  } catch (const DimensionMismatchError& e) {
    throw ParseError(e.what());
  }
}

PointSet parse_point_set(const std::string& text) {
  std::istringstream in(text);
  return parse_point_set(in);
}

std::string serialize_point_set(const PointSet& ps) {
  std::ostringstream out;
  out << "format " << kPointSetFormat << "\n";
  out << "dimension " << ps.dimension() << "\n";
  out << "count " << ps.size() << "\n";
  for (const Point& p : ps.points()) {
    out << "point";
    for (const Rational& c : p) out << " " << c.str();
    out << "\n";
  }
  return out.str();
}

PairPoly parse_pair_poly(std::istream& in, std::size_t expected_vars) {
  const auto lines = content_lines(in);
  std::size_t i = 0;
  if (i < lines.size() && lines[i][0] == "format") {
    if (lines[i].size() != 3 ||
        lines[i][1] + " " + lines[i][2] != kPairPolyFormat) {
      throw ParseError("unsupported polynomial format");
    }
    ++i;
  }
  if (i >= lines.size() || lines[i][0] != "vars" || lines[i].size() != 2) {
    throw ParseError("expected 'vars <d>'");
  }
  const std::size_t vars = parse_count(lines[i][1], "vars");
  if (vars != expected_vars) {
    throw ParseError("polynomial in " + std::to_string(vars) +
                     " variables per side, point set needs " +
                     std::to_string(expected_vars));
  }
  ++i;
  std::optional<unsigned> declared_bound;
  if (i < lines.size() && lines[i][0] == "degree_bound") {
    if (lines[i].size() != 2) throw ParseError("expected 'degree_bound <n>'");
    declared_bound =
        static_cast<unsigned>(parse_count(lines[i][1], "degree_bound"));
    ++i;
  }
  std::vector<SparseTerm> terms;
  unsigned max_degree = 0;
  for (; i < lines.size(); ++i) {
    if (lines[i][0] != "term") {
      throw ParseError("unexpected line starting with '" + lines[i][0] + "'");
    }
    if (lines[i].size() != 2 + 2 * vars) {
      throw ParseError("term needs coefficient plus " +
                       std::to_string(2 * vars) + " exponents");
    }
    SparseTerm t;
    t.coeff = Rational::from_string(lines[i][1]);
    std::vector<unsigned> xe(vars), ye(vars);
    for (std::size_t v = 0; v < vars; ++v) {
      xe[v] = static_cast<unsigned>(parse_count(lines[i][2 + v], "exponent"));
      ye[v] = static_cast<unsigned>(
          parse_count(lines[i][2 + vars + v], "exponent"));
    }
    t.x_part = Monomial::of(std::move(xe));
    t.y_part = Monomial::of(std::move(ye));
    max_degree = std::max(max_degree, t.degree());
    terms.push_back(std::move(t));
  }
  return PairPoly::sparse(std::move(terms),
                          declared_bound.value_or(max_degree));
}

PairPoly parse_pair_poly(const std::string& text, std::size_t expected_vars) {
  std::istringstream in(text);
  return parse_pair_poly(in, expected_vars);
}

namespace {

void write_check(std::ostream& out, const CertificateCheck& c) {
  out << "check " << c.name << " " << c.lhs.get_str() << " " << c.relation
      << " " << c.rhs.get_str() << " " << (c.pass ? "pass" : "fail") << "\n";
}

void write_meta(std::ostream& out, const ReportMeta& meta) {
  out << "tool " << meta.tool << "\n";
  out << "input_digest " << meta.input_digest << "\n";
  if (meta.timestamp) out << "timestamp " << *meta.timestamp << "\n";
}

}  // namespace

std::string serialize_certificate(const Certificate& cert,
                                  const ReportMeta& meta) {
  std::ostringstream out;
  out << "format " << kCertificateFormat << "\n";
  write_meta(out, meta);
  out << "set_size " << cert.set_size << "\n";
  out << "dimension " << cert.dimension << "\n";
  out << "s " << cert.s << "\n";
  out << "spectrum";
  for (const Rational& q : cert.spectrum.values()) out << " " << q.str();
  out << "\n";
  out << "clp_rank " << cert.clp_rank << "\n";
  out << "inertia_positive " << cert.clp_inertia.positive << "\n";
  out << "inertia_negative " << cert.clp_inertia.negative << "\n";
  out << "inertia_zero " << cert.clp_inertia.zero << "\n";
  out << "dim_s " << cert.dim_s_value << "\n";
  out << "bbs_bound " << cert.bbs_value.get_str() << "\n";
  out << "scalar_identity " << (cert.scalar_identity ? "true" : "false")
      << "\n";
  out << "scalar " << cert.scalar.str() << "\n";
  out << "symmetrized " << (cert.symmetrized ? "true" : "false") << "\n";
  for (const CertificateCheck& c : cert.checks) write_check(out, c);
  out << "result " << (cert.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  Certificate cert;
  std::set<Rational> spectrum;
  for (const auto& tokens : content_lines(in)) {
    const std::string& key = tokens[0];
    if (key == "format" || key == "tool" || key == "input_digest" ||
        key == "timestamp" || key == "result") {
      continue;
    }
    if (key == "spectrum") {
      for (std::size_t j = 1; j < tokens.size(); ++j) {
        spectrum.insert(Rational::from_string(tokens[j]));
      }
      cert.spectrum = DistanceSpectrum(spectrum);
      continue;
    }
    if (key == "check") {
      if (tokens.size() != 6) throw ParseError("bad check line");
      CertificateCheck c;
      c.name = tokens[1];
      c.lhs = Int(tokens[2]);
      c.relation = tokens[3];
      c.rhs = Int(tokens[4]);
      c.pass = tokens[5] == "pass";
      cert.checks.push_back(std::move(c));
      continue;
    }
    if (tokens.size() != 2) throw ParseError("bad line: " + key);
    const std::string& value = tokens[1];
    if (key == "set_size") {
      cert.set_size = parse_count(value, "set_size");
    } else if (key == "dimension") {
      cert.dimension = parse_count(value, "dimension");
    } else if (key == "s") {
      cert.s = parse_count(value, "s");
    } else if (key == "clp_rank") {
      cert.clp_rank = parse_count(value, "clp_rank");
    } else if (key == "inertia_positive") {
      cert.clp_inertia.positive = parse_count(value, "inertia");
    } else if (key == "inertia_negative") {
      cert.clp_inertia.negative = parse_count(value, "inertia");
    } else if (key == "inertia_zero") {
      cert.clp_inertia.zero = parse_count(value, "inertia");
    } else if (key == "dim_s") {
      cert.dim_s_value = parse_count(value, "dim_s");
    } else if (key == "bbs_bound") {
      cert.bbs_value = Int(value);
    } else if (key == "scalar_identity") {
      cert.scalar_identity = parse_flag(value, "scalar_identity");
    } else if (key == "scalar") {
      cert.scalar = Rational::from_string(value);
    } else if (key == "symmetrized") {
      cert.symmetrized = parse_flag(value, "symmetrized");
    } else {
      throw ParseError("unknown certificate key: " + key);
    }
  }
  return cert;
}

std::string human_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "point set: " << cert.set_size << " points in dimension "
      << cert.dimension << "\n";
  out << "squared distances:";
  for (const Rational& q : cert.spectrum.values()) out << " " << q.str();
  out << "  (s = " << cert.s << ")\n";
  out << "matrix: "
      << (cert.scalar_identity ? "scalar identity, scalar = " + cert.scalar.str()
                               : "NOT a scalar identity")
      << "\n";
  out << "rank " << cert.clp_rank << ", inertia (+" << cert.clp_inertia.positive
      << ", -" << cert.clp_inertia.negative << ", 0:" << cert.clp_inertia.zero
      << ")\n";
  out << "dim_s " << cert.dim_s_value << ", bound C(d+s,s) = "
      << cert.bbs_value.get_str() << "\n";
  for (const CertificateCheck& c : cert.checks) {
    out << "  " << c.name << ": " << c.lhs.get_str() << " " << c.relation
        << " " << c.rhs.get_str() << "  " << (c.pass ? "ok" : "FAIL") << "\n";
  }
  out << "result: " << (cert.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string serialize_verify(const VerifyOutcome& v, const ReportMeta& meta) {
  std::ostringstream out;
  out << "format fewdist-verify 1\n";
  write_meta(out, meta);
  out << "set_size " << v.set_size << "\n";
  out << "dimension " << v.dimension << "\n";
  out << "s " << v.s << "\n";
  out << "degree_bound " << v.degree_bound << "\n";
  out << "clp_rank " << v.rank_result.clp_rank << "\n";
  out << "rank_bound " << v.rank_result.bound << "\n";
  out << "inertia_positive " << v.inertia_result.inertia.positive << "\n";
  out << "inertia_negative " << v.inertia_result.inertia.negative << "\n";
  out << "inertia_zero " << v.inertia_result.inertia.zero << "\n";
  out << "dim_s " << v.inertia_result.bound << "\n";
  out << "symmetrized " << (v.inertia_result.symmetrized ? "true" : "false")
      << "\n";
  out << "check rank_le_two_dim_s " << v.rank_result.clp_rank << " <= "
      << v.rank_result.bound << " "
      << (v.rank_result.pass ? "pass" : "fail") << "\n";
  const std::size_t max_inertia = std::max(v.inertia_result.inertia.positive,
                                           v.inertia_result.inertia.negative);
  out << "check max_inertia_le_dim_s " << max_inertia << " <= "
      << v.inertia_result.bound << " "
      << (v.inertia_result.pass ? "pass" : "fail") << "\n";
  out << "check key_observation_violations "
      << (v.key_observation_ok ? 0 : 1) << " = 0 "
      << (v.key_observation_ok ? "pass" : "fail") << "\n";
  out << "result " << (v.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string human_verify(const VerifyOutcome& v) {
  std::ostringstream out;
  out << "point set: " << v.set_size << " points in dimension " << v.dimension
      << "\n";
  out << "polynomial degree bound " << v.degree_bound << " (limit 2s+1 = "
      << 2 * v.s + 1 << ")\n";
  out << "rank " << v.rank_result.clp_rank << " <= " << v.rank_result.bound
      << ": " << (v.rank_result.pass ? "ok" : "FAIL") << "\n";
  out << "inertia (+" << v.inertia_result.inertia.positive << ", -"
      << v.inertia_result.inertia.negative << ", 0:"
      << v.inertia_result.inertia.zero << "), max <= "
      << v.inertia_result.bound << ": "
      << (v.inertia_result.pass ? "ok" : "FAIL")
      << (v.inertia_result.symmetrized ? " (symmetrized)" : "") << "\n";
  out << "orthogonal-space pairing all zero: "
      << (v.key_observation_ok ? "ok" : "FAIL") << "\n";
  out << "result: " << (v.pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string dims_report(const PointSet& ps, unsigned s) {
  std::ostringstream out;
  out << "format fewdist-dims 1\n";
  out << "dimension " << ps.dimension() << "\n";
  out << "set_size " << ps.size() << "\n";
  out << "s " << s << "\n";
  out << "dim_s " << dim_s(ps, s) << "\n";
  out << "bound " << bbs_bound(ps.dimension(), s).get_str() << "\n";
  out << "omega_dim " << omega_basis(ps, s).size() << "\n";
  return out.str();
}

std::string search_report(const PointSet& ground, unsigned s,
                          const SearchResult& result) {
  std::ostringstream out;
  out << "format fewdist-search 1\n";
  out << "ground_size " << ground.size() << "\n";
  out << "dimension " << ground.dimension() << "\n";
  out << "s " << s << "\n";
  out << "best_size " << result.best_size << "\n";
  out << "witness_indices";
  for (std::size_t i : result.best_indices) out << " " << i;
  out << "\n";
  for (std::size_t i : result.best_indices) {
    out << "witness_point";
    for (const Rational& c : ground[i]) out << " " << c.str();
    out << "\n";
  }
  out << "nodes_explored " << result.nodes_explored << "\n";
  out << "pruned_by_bound " << result.pruned_by_bound << "\n";
  out << "exhaustive " << (result.exhaustive ? "true" : "false") << "\n";
  return out.str();
}

int report_exit_code(bool all_checks_pass) { return all_checks_pass ? 0 : 1; }

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return std::string(buf);
}

std::string utc_timestamp_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

}  // namespace fewdist::io
