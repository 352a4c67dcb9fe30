// fewdist — exact certification of few-distance-set bounds on rational
// point sets. Subcommands: gen, certify, dims, verify, search.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fewdist/clp.hpp"
#include "fewdist/errors.hpp"
#include "fewdist/generators.hpp"
#include "fewdist/io.hpp"
#include "fewdist/search.hpp"

namespace {

constexpr const char* kToolVersion = "fewdist 0.1.0";

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw fewdist::ParseError("cannot open input file: " + path);
  return read_stream(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fewdist::ParseError("cannot open output file: " + path);
  out << text;
}

fewdist::io::ReportMeta make_meta(const std::string& canonical_input,
                                  bool no_timestamp) {
  fewdist::io::ReportMeta meta;
  meta.tool = kToolVersion;
  meta.input_digest = fewdist::io::fnv1a64_hex(canonical_input);
  if (!no_timestamp) meta.timestamp = fewdist::io::utc_timestamp_now();
  return meta;
}

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string output;
};

int run_gen(const GenOptions& opt) {
  fewdist::PointSet ps = [&] {
    if (opt.family == "simplex") return fewdist::simplex_standard(opt.n);
    if (opt.family == "crosspolytope") return fewdist::cross_polytope(opt.d);
    if (opt.family == "johnson") return fewdist::johnson(opt.n, opt.k);
    if (opt.family == "hypercube") return fewdist::hypercube(opt.d);
    throw fewdist::UnknownFamilyError("unknown family: " + opt.family);
  }();
  write_output(opt.output, fewdist::io::serialize_point_set(ps));
  return 0;
}

struct CertifyOptions {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "machine";
  unsigned jobs = 1;
  bool no_timestamp = false;
};

int run_certify(const CertifyOptions& opt) {
  std::vector<std::string> texts;
  if (opt.inputs.empty()) {
    texts.push_back(read_stream(std::cin));
  } else {
    for (const auto& path : opt.inputs) texts.push_back(read_input(path));
  }
  const std::size_t count = texts.size();
  std::vector<fewdist::PointSet> sets;
  sets.reserve(count);
  for (const auto& text : texts) {
    sets.push_back(fewdist::io::parse_point_set(text));
  }
  std::vector<fewdist::Certificate> certs(count);
  // Independent inputs; results are merged back in input order.
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs) \
    if (opt.jobs > 1)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    certs[static_cast<std::size_t>(i)] =
        fewdist::certify_bbs(sets[static_cast<std::size_t>(i)]);
  }
  std::ostringstream out;
  bool all_pass = true;
  for (std::size_t i = 0; i < count; ++i) {
    const auto meta = make_meta(fewdist::io::serialize_point_set(sets[i]),
                                opt.no_timestamp);
    if (i > 0) out << "\n";
    if (opt.format == "human") {
      out << fewdist::io::human_certificate(certs[i]);
    } else {
      out << fewdist::io::serialize_certificate(certs[i], meta);
    }
    all_pass = all_pass && certs[i].pass();
  }
  write_output(opt.output, out.str());
  return fewdist::io::report_exit_code(all_pass);
}

struct DimsOptions {
  std::string input;
  std::string output;
  unsigned s = 0;
};

int run_dims(const DimsOptions& opt) {
  const fewdist::PointSet ps =
      fewdist::io::parse_point_set(read_input(opt.input));
  write_output(opt.output, fewdist::io::dims_report(ps, opt.s));
  return 0;
}

struct VerifyOptions {
  std::string input;
  std::string poly;
  std::string output;
  std::string format = "machine";
  unsigned s = 0;
  bool no_timestamp = false;
};

int run_verify(const VerifyOptions& opt) {
  const std::string input_text = read_input(opt.input);
  const fewdist::PointSet ps = fewdist::io::parse_point_set(input_text);
  std::ifstream poly_in(opt.poly);
  if (!poly_in) {
    throw fewdist::ParseError("cannot open polynomial file: " + opt.poly);
  }
  const fewdist::PairPoly p =
      fewdist::io::parse_pair_poly(read_stream(poly_in), ps.dimension());

  fewdist::io::VerifyOutcome v;
  v.set_size = ps.size();
  v.dimension = ps.dimension();
  v.s = opt.s;
  v.degree_bound = p.declared_degree_bound();
  v.rank_result = fewdist::check_rank_bound(p, ps, opt.s);
  v.inertia_result = fewdist::check_inertia_bound(p, ps, opt.s);
  v.key_observation_ok = fewdist::key_observation_check(p, ps, opt.s);

  const auto meta =
      make_meta(fewdist::io::serialize_point_set(ps), opt.no_timestamp);
  write_output(opt.output, opt.format == "human"
                               ? fewdist::io::human_verify(v)
                               : fewdist::io::serialize_verify(v, meta));
  return fewdist::io::report_exit_code(v.pass());
}

struct SearchOptions {
  std::string input;
  std::string output;
  unsigned s = 1;
  std::uint64_t budget = fewdist::kUnlimitedBudget;
};

int run_search(const SearchOptions& opt) {
  const fewdist::PointSet ground =
      fewdist::io::parse_point_set(read_input(opt.input));
  const fewdist::SearchResult result =
      fewdist::max_s_distance_subset(ground, opt.s, opt.budget);
  write_output(opt.output, fewdist::io::search_report(ground, opt.s, result));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of few-distance-set bounds"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand(
      "gen", "generate a classical configuration as a point set file");
  gen_cmd->add_option("family", gen.family,
                      "simplex | crosspolytope | johnson | hypercube")
      ->required();
  gen_cmd->add_option("--n", gen.n, "points (simplex) / ground size (johnson)");
  gen_cmd->add_option("--k", gen.k, "subset size (johnson)");
  gen_cmd->add_option("--d", gen.d, "dimension (crosspolytope, hypercube)");
  gen_cmd->add_option("--output", gen.output, "output path (default stdout)");

  CertifyOptions certify;
  auto* certify_cmd = app.add_subcommand(
      "certify", "run the full bound verification on point set files");
  certify_cmd->add_option("--input", certify.inputs,
                          "input path(s); stdin when omitted");
  certify_cmd->add_option("--output", certify.output, "output path");
  certify_cmd->add_option("--format", certify.format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  certify_cmd->add_option("--jobs", certify.jobs,
                          "certify independent inputs in parallel");
  certify_cmd->add_flag("--no-timestamp", certify.no_timestamp,
                        "omit the timestamp line (reproducible reports)");

  DimsOptions dims;
  auto* dims_cmd = app.add_subcommand(
      "dims", "polynomial function-space dimensions on a point set");
  dims_cmd->add_option("--input", dims.input, "input path; stdin when omitted");
  dims_cmd->add_option("--output", dims.output, "output path");
  dims_cmd->add_option("-s", dims.s, "degree limit")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check rank/inertia bounds for a supplied pair polynomial");
  verify_cmd->add_option("--input", verify.input,
                         "point set path; stdin when omitted");
  verify_cmd->add_option("--poly", verify.poly, "pair polynomial file")
      ->required();
  verify_cmd->add_option("--output", verify.output, "output path");
  verify_cmd->add_option("--format", verify.format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  verify_cmd->add_option("-s", verify.s, "degree parameter s")->required();
  verify_cmd->add_flag("--no-timestamp", verify.no_timestamp,
                       "omit the timestamp line");

  SearchOptions search;
  auto* search_cmd = app.add_subcommand(
      "search", "largest subset realizing at most s distances");
  search_cmd->add_option("--input", search.input,
                         "ground set path; stdin when omitted");
  search_cmd->add_option("--output", search.output, "output path");
  search_cmd->add_option("-s", search.s, "distance budget s")->required();
  search_cmd->add_option("--budget", search.budget,
                         "node budget (default unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; bad usage exits 2
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (certify_cmd->parsed()) return run_certify(certify);
    if (dims_cmd->parsed()) return run_dims(dims);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (search_cmd->parsed()) return run_search(search);
  } catch (const fewdist::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const fewdist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
