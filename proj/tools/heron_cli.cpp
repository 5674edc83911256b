// heron: prime pairs, rank certificates, the rank table and triangle
// construction for y^2 = x (x - 1)(x + p^2).
//
// Exit codes: 0 success, 2 flag error, 3 hypothesis failure,
// 4 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heron/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlags = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitInternal = 4;

std::uint64_t default_search_bound() {
  if (const char* env = std::getenv("HERON_SEARCH_BOUND")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed HERON_SEARCH_BOUND='" << env << "'\n";
    }
  }
  return 1000;
}

struct Options {
  std::uint64_t limit = 0;
  std::string p;
  std::uint64_t search_bound = default_search_bound();
  std::string format;  // empty: per-command default
  std::uint64_t torsion_ell_max = 50;
  unsigned workers = 1;
  bool header = false;
  std::string input;
};

heron::descent::RankOptions rank_options(const Options& o) {
  heron::descent::RankOptions r;
  r.search_bound = o.search_bound;
  r.torsion_ell_max = o.torsion_ell_max;
  r.workers = o.workers;
  return r;
}

// Parses --p and checks the prime-pair hypothesis. Returns an exit code on failure.
std::optional<int> require_pair(const Options& o, std::optional<heron::pairs::PrimePair>& out) {
  heron::arith::Integer p;
  try {
    p = heron::arith::Integer(o.p, 10);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --p must be a decimal integer\n";
    return kExitFlags;
  }
  if (p < 3 || p % 2 == 0 || !heron::arith::is_prime(p)) {
    std::cerr << "hypothesis fails: " << p << " is not an odd prime\n";
    return kExitHypothesis;
  }
  out = heron::pairs::make_pair(p);
  if (!out) {
    const heron::arith::Integer q = (p * p + 1) / 2;
    std::cerr << "hypothesis fails: not a prime pair, (p^2+1)/2 = " << q << " is not prime\n";
    return kExitHypothesis;
  }
  return std::nullopt;
}

int run_pairs(const Options& o, heron::report::Format f) {
  heron::report::write_pairs(std::cout, heron::pairs::scan_pairs(o.limit, o.workers), f, o.header);
  return kExitOk;
}

int run_rank(const Options& o, heron::report::Format f) {
  std::optional<heron::pairs::PrimePair> pair;
  if (auto code = require_pair(o, pair)) return *code;
  if (!pair->in_theorem_scope()) {
    std::cerr << "out of theorem scope: p = " << pair->p << " is 1 mod 8\n";
    return kExitHypothesis;
  }
  heron::report::write_certificate(std::cout, heron::descent::rank_bounds(*pair, rank_options(o)), f);
  return kExitOk;
}

int run_table(const Options& o, heron::report::Format f) {
  const auto rows = heron::report::build_table(o.limit, rank_options(o), o.workers);
  heron::report::write_table(std::cout, rows, f, o.header);
  return kExitOk;
}

int run_triangle(const Options& o, heron::report::Format f) {
  std::optional<heron::pairs::PrimePair> pair;
  if (auto code = require_pair(o, pair)) return *code;
  const auto report = heron::report::build_triangle_report(*pair, o.search_bound, rank_options(o));
  heron::report::write_triangle_report(std::cout, report, f);
  if (report.status == heron::report::TriangleReport::Status::NotFoundWithinBound)
    std::cerr << "no triangle found within bound " << o.search_bound << '\n';
  return kExitOk;
}

int run_verify(const Options& o, heron::report::Format f) {
  std::stringstream buffer;
  if (o.input.empty() || o.input == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(o.input);
    if (!in) {
      std::cerr << "error: cannot open " << o.input << '\n';
      return kExitFlags;
    }
    buffer << in.rdbuf();
  }
  heron::dioph::HeronTriangle tri;
  try {
    tri = heron::report::triangle_from_json(heron::report::json::parse(buffer.str()));
  } catch (const std::exception& e) {
    std::cerr << "error: bad triangle JSON: " << e.what() << '\n';
    return kExitFlags;
  }
  const auto report = heron::dioph::verify_heron(tri);
  heron::report::write_verification(std::cout, tri, report, f);
  return report.all_passed() ? kExitOk : kExitHypothesis;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank certificates and Heron triangles for y^2 = x(x-1)(x+p^2)"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub, const char* fallback) {
    sub->add_option("--format", o.format, std::string("Output format (default ") + fallback + ")")
        ->check(CLI::IsMember({"md", "csv", "jsonl"}));
  };
  const auto add_descent = [&](CLI::App* sub) {
    sub->add_option("--search-bound", o.search_bound, "Witness search bound (env HERON_SEARCH_BOUND)")
        ->capture_default_str();
    sub->add_option("--torsion-ell-max", o.torsion_ell_max, "Largest prime used to certify torsion")
        ->capture_default_str();
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  };

  auto* pairs = app.add_subcommand("pairs", "List primes p <= limit with (p^2+1)/2 prime");
  pairs->add_option("--limit", o.limit, "Largest p")->required();
  pairs->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  pairs->add_flag("--header", o.header, "Emit a CSV header row");
  add_format(pairs, "csv");

  auto* rank = app.add_subcommand("rank", "Certify the rank for one prime pair");
  rank->add_option("--p", o.p, "The prime p")->required();
  add_descent(rank);
  add_format(rank, "md");

  auto* table = app.add_subcommand("table", "Rank table for all prime pairs up to limit");
  table->add_option("--limit", o.limit, "Largest p")->required();
  table->add_flag("--header", o.header, "Emit a CSV header row");
  add_descent(table);
  add_format(table, "md");

  auto* triangle = app.add_subcommand("triangle", "Construct or rule out Heron triangles of area p");
  triangle->add_option("--p", o.p, "The prime p")->required();
  add_descent(triangle);
  add_format(triangle, "md");

  auto* verify = app.add_subcommand("verify", "Verify a triangle given as JSON");
  verify->add_option("--input", o.input, "Triangle JSON file ('-' or omitted: stdin)");
  add_format(verify, "md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFlags;
  }

  try {
    if (o.format.empty()) o.format = pairs->parsed() ? "csv" : "md";
    const auto f = heron::report::parse_format(o.format);
    if (pairs->parsed()) return run_pairs(o, f);
    if (rank->parsed()) return run_rank(o, f);
    if (table->parsed()) return run_table(o, f);
    if (triangle->parsed()) return run_triangle(o, f);
    if (verify->parsed()) return run_verify(o, f);
  } catch (const heron::descent::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const heron::descent::OutOfScope& e) {
    std::cerr << e.what() << '\n';
    return kExitHypothesis;
  }
  return kExitFlags;
}
