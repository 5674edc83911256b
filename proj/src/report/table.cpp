#include <algorithm>
#include <future>

#include "heron/report.hpp"

namespace heron::report {
namespace {

std::string rank_cell(const TableRow& row) {
  if (!row.in_scope) return "n/a";
  if (row.certified) return std::to_string(row.rank_lower);
  return "[" + std::to_string(row.rank_lower) + ", " + std::to_string(row.rank_upper) + "]";
}

TableRow row_for(const pairs::PrimePair& pair, const descent::RankOptions& options) {
  if (!pair.in_theorem_scope()) {
    TableRow row;
    row.p = pair.p;
    row.residue_class = pair.residue_class;
    row.q = pair.q;
    row.in_scope = false;
    return row;
  }
  return table_row(descent::rank_bounds(pair, options));
}

}  // namespace

void write_pairs(std::ostream& os, const std::vector<pairs::PrimePair>& pairs, Format format,
                 bool header) {
  switch (format) {
    case Format::Csv:
      if (header) os << "p,p_mod_8,q\n";
      for (const auto& pr : pairs) os << pr.p << ',' << pr.residue_class << ',' << pr.q << '\n';
      break;
    case Format::JsonLines:
      for (const auto& pr : pairs) os << pair_json(pr).dump() << '\n';
      break;
    case Format::Markdown:
      os << "| p | p mod 8 | q | in scope |\n|---|---|---|---|\n";
      for (const auto& pr : pairs)
        os << "| " << pr.p << " | " << pr.residue_class << " | " << pr.q << " | "
           << (pr.in_theorem_scope() ? "yes" : "no (p = 1 mod 8)") << " |\n";
      break;
  }
}

TableRow table_row(const descent::RankResult& r) {
  TableRow row;
  row.p = r.pair.p;
  row.residue_class = r.pair.residue_class;
  row.q = r.pair.q;
  row.rank_lower = r.lower;
  row.rank_upper = r.upper;
  row.certified = r.certified;
  for (const auto& o : r.outcomes)
    row.unresolved = row.unresolved || o.verdict == descent::DescentOutcome::Verdict::Unresolved;
  return row;
}

std::vector<TableRow> build_table(std::uint64_t limit, const descent::RankOptions& options,
                                  unsigned workers) {
  const auto pairs = pairs::scan_pairs(limit, workers);
  std::vector<TableRow> rows;
  if (workers <= 1) {
    for (const auto& pair : pairs) rows.push_back(row_for(pair, options));
    return rows;
  }
  std::vector<std::future<TableRow>> jobs;
  for (const auto& pair : pairs)
    jobs.push_back(std::async(std::launch::async, row_for, std::cref(pair), std::cref(options)));
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

void write_table(std::ostream& os, const std::vector<TableRow>& rows, Format format, bool header) {
  switch (format) {
    case Format::Csv:
      if (header) os << "p,p_mod_8,q,rank_lower,rank_upper,certified\n";
      for (const auto& r : rows)
        os << r.p << ',' << r.residue_class << ',' << r.q << ',' << r.rank_lower << ',' << r.rank_upper
           << ',' << (r.certified ? "true" : "false") << '\n';
      break;
    case Format::JsonLines:
      for (const auto& r : rows) {
        json j = {{"kind", "table-row"},     {"p", r.p.get_str()},       {"p_mod_8", r.residue_class},
                  {"q", r.q.get_str()},       {"rank_lower", r.rank_lower},
                  {"rank_upper", r.rank_upper}, {"certified", r.certified},
                  {"unresolved", r.unresolved}, {"in_theorem_scope", r.in_scope}};
        os << j.dump() << '\n';
      }
      break;
    case Format::Markdown:
      os << "| p | p mod 8 | q | Rank |\n|---|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << r.p << " | " << r.residue_class << " | " << r.q << " | " << rank_cell(r);
        if (r.unresolved) os << " (unresolved coset)";
        os << " |\n";
      }
      break;
  }
}

std::string status_name(TriangleReport::Status s) {
  switch (s) {
    case TriangleReport::Status::Found: return "found";
    case TriangleReport::Status::ProvenNonexistent: return "proven-nonexistent";
    case TriangleReport::Status::NotFoundWithinBound: return "not-found-within-bound";
  }
  return "unknown";
}

TriangleReport build_triangle_report(const pairs::PrimePair& pair, std::uint64_t bound,
                                     const descent::RankOptions& options) {
  TriangleReport report;
  report.pair = pair;
  report.bound = bound;
  report.corollary = dioph::solve_corollary(pair.p);

  auto solutions = dioph::solve_quartic(pair.p, bound);
  if (report.corollary) {
    const auto& induced = report.corollary->induced;
    bool seen = false;
    for (const auto& s : solutions) seen = seen || s == induced;
    if (!seen) solutions.insert(solutions.begin(), induced);
  }
  for (auto& sol : solutions) {
    auto tri = dioph::triangle_from_solution(sol);
    auto verification = dioph::verify_heron(tri);
    report.triangles.push_back({std::move(sol), std::move(tri), std::move(verification)});
  }
  if (!report.triangles.empty()) {
    report.status = TriangleReport::Status::Found;
    return report;
  }
  if (!pair.in_theorem_scope()) return report;

  report.certificate = descent::rank_bounds(pair, options);
  const auto& cert = *report.certificate;
  if (cert.certified && cert.upper == 0 &&
      cert.torsion.kind == curve::TorsionVerdict::Kind::KleinFour)
    report.status = TriangleReport::Status::ProvenNonexistent;
  return report;
}

void write_triangle_report(std::ostream& os, const TriangleReport& report, Format format) {
  if (format == Format::JsonLines) {
    json triangles = json::array();
    for (const auto& e : report.triangles)
      triangles.push_back({{"solution", solution_json(e.solution)},
                           {"triangle", triangle_json(e.triangle)},
                           {"verification", verification_json(e.verification)}});
    json j = {{"kind", "triangle-report"},
              {"p", report.pair.p.get_str()},
              {"q", report.pair.q.get_str()},
              {"status", status_name(report.status)},
              {"bound", report.bound},
              {"triangles", std::move(triangles)}};
    if (report.corollary)
      j["corollary"] = {{"x", report.corollary->x.get_str()}, {"y", report.corollary->y.get_str()}};
    if (report.certificate) j["certificate"] = certificate_json(*report.certificate);
    os << j.dump() << '\n';
    return;
  }
  if (format == Format::Csv) {
    for (const auto& e : report.triangles)
      os << report.pair.p << ',' << e.triangle.a << ',' << e.triangle.b << ',' << e.triangle.c << ','
         << (e.verification.all_passed() ? "pass" : "fail") << '\n';
    if (report.triangles.empty()) os << report.pair.p << ",,,," << status_name(report.status) << '\n';
    return;
  }

  os << "# Triangles with area " << report.pair.p << " and tan(theta/2) = 1/" << report.pair.p << "\n\n";
  std::string status = status_name(report.status);
  std::replace(status.begin(), status.end(), '-', ' ');
  os << "status: " << status << '\n';
  if (report.corollary)
    os << "x^2 + y^2 + x^2 y^2 = p^2 has the solution (x, y) = (" << report.corollary->x << ", "
       << report.corollary->y << ")\n";
  for (const auto& e : report.triangles) {
    os << "\nsolution (x, y, z) = (" << e.solution.x << ", " << e.solution.y << ", " << e.solution.z << ")\n";
    write_verification(os, e.triangle, e.verification, Format::Markdown);
  }
  if (report.status == TriangleReport::Status::ProvenNonexistent)
    os << "\nNo such triangle exists: the curve has rank 0 and torsion Z/2 x Z/2, so the quartic "
          "has no coprime solution.\n\n";
  else if (report.status == TriangleReport::Status::NotFoundWithinBound)
    os << "\nno triangle found within bound " << report.bound << '\n';
  if (report.certificate) write_certificate(os, *report.certificate, Format::Markdown);
}

}  // namespace heron::report
