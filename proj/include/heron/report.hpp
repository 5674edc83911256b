#pragma once

// Rendering of pairs, rank certificates, tables and triangle reports in
// markdown, CSV and JSON-lines. Rationals serialize as
// {"num": "<decimal>", "den": "<decimal>"}; large integers as decimal
// strings. The schema lives in docs/schema.json.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heron/descent.hpp"
#include "heron/dioph.hpp"
#include "heron/prime_pairs.hpp"

namespace heron::report {

using json = nlohmann::ordered_json;

enum class Format { Markdown, Csv, JsonLines };

/// "md", "csv" or "jsonl"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

json rational_json(const arith::Rational& r);
arith::Rational rational_from_json(const json& j);

json pair_json(const pairs::PrimePair& pair);
json certificate_json(const descent::RankResult& result);
json triangle_json(const dioph::HeronTriangle& tri);
json solution_json(const dioph::DiophSolution& sol);
json verification_json(const dioph::VerificationReport& report);

/// Accepts {"a":..,"b":..,"c":..,"p":..} where each side is a rational
/// object or a "n/d" string. Throws std::invalid_argument on bad input.
dioph::HeronTriangle triangle_from_json(const json& j);

void write_pairs(std::ostream& os, const std::vector<pairs::PrimePair>& pairs, Format format,
                 bool header = false);

void write_certificate(std::ostream& os, const descent::RankResult& result, Format format);

struct TableRow {
  arith::Integer p;
  unsigned residue_class = 0;
  arith::Integer q;
  unsigned rank_lower = 0;
  unsigned rank_upper = 0;
  bool certified = false;
  bool unresolved = false;  // some coset neither obstructed nor witnessed
  bool in_scope = true;     // false for p = 1 mod 8 (no ranks computed)
};

TableRow table_row(const descent::RankResult& result);

/// Runs the full pipeline for every pair with p <= limit. Rows come back
/// in ascending p regardless of `workers`.
std::vector<TableRow> build_table(std::uint64_t limit, const descent::RankOptions& options,
                                  unsigned workers = 1);

void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format format,
                 bool header = false);

struct TriangleReport {
  enum class Status { Found, ProvenNonexistent, NotFoundWithinBound };
  Status status = Status::NotFoundWithinBound;
  pairs::PrimePair pair;
  std::uint64_t bound = 0;
  std::optional<dioph::CorollarySolution> corollary;
  struct Entry {
    dioph::DiophSolution solution;
    dioph::HeronTriangle triangle;
    dioph::VerificationReport verification;
  };
  std::vector<Entry> triangles;
  /// Attached whenever the descent ran; required for ProvenNonexistent.
  std::optional<descent::RankResult> certificate;
};

std::string status_name(TriangleReport::Status s);

/// Searches the quartic and the corollary equation up to `bound`; when
/// nothing turns up, a rank-0 certificate with Z/2 x Z/2 torsion upgrades
/// the answer to "proven nonexistent".
TriangleReport build_triangle_report(const pairs::PrimePair& pair, std::uint64_t bound,
                                     const descent::RankOptions& options);

void write_triangle_report(std::ostream& os, const TriangleReport& report, Format format);

void write_verification(std::ostream& os, const dioph::HeronTriangle& tri,
                        const dioph::VerificationReport& report, Format format);

}  // namespace heron::report
