#include <stdexcept>

#include "heron/report.hpp"

namespace heron::report {
namespace {

using descent::DescentOutcome;

std::string torsion_label(const curve::TorsionVerdict& t) {
  return t.kind == curve::TorsionVerdict::Kind::KleinFour ? "Z/2xZ/2" : "inconclusive";
}

json torsion_json(const curve::TorsionVerdict& t) {
  json counts = json::array();
  for (const auto& [ell, count] : t.counts) counts.push_back({{"ell", ell}, {"count", count}});
  return {{"verdict", torsion_label(t)},
          {"witness_ell", t.witness_ell},
          {"count_gcd", t.count_gcd},
          {"counts", std::move(counts)}};
}

json point_json(const curve::RationalPoint& pt) {
  if (pt.infinity) return {{"infinity", true}};
  return {{"x", rational_json(pt.x)}, {"y", rational_json(pt.y)}};
}

json outcome_json(const DescentOutcome& o) {
  json members = json::array();
  for (const auto& m : o.candidate.coset) members.push_back(m.label());
  json j = {{"index", o.candidate.index},
            {"representative", o.candidate.representative.label()},
            {"members", std::move(members)},
            {"verdict", descent::verdict_name(o.verdict)}};
  if (o.reason) {
    j["reason"] = {{"kind", descent::kind_name(o.reason->kind)},
                   {"modulus", o.reason->modulus.get_str()},
                   {"symbol", o.reason->symbol},
                   {"detail", o.reason->detail}};
  }
  if (o.witness) {
    j["witness"] = {{"pair", o.witnessed_pair.label()},
                    {"r1", o.witness->r1.get_str()},
                    {"r2", o.witness->r2.get_str()},
                    {"r3", o.witness->r3.get_str()},
                    {"s", o.witness->s.get_str()}};
  }
  if (o.point) j["point"] = point_json(*o.point);
  if (o.verdict == DescentOutcome::Verdict::Unresolved) j["search_bound"] = o.search_bound;
  return j;
}

arith::Integer integer_from_json(const json& j, const char* field) {
  try {
    if (j.is_string()) return arith::Integer(j.get<std::string>(), 10);
    if (j.is_number_integer()) return arith::from_i64(j.get<std::int64_t>());
  } catch (const std::invalid_argument&) {
  }
  throw std::invalid_argument(std::string("expected an integer for '") + field + "'");
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "md") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "jsonl") return Format::JsonLines;
  throw std::invalid_argument("unknown format '" + text + "' (expected md, csv or jsonl)");
}

json rational_json(const arith::Rational& r) {
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

arith::Rational rational_from_json(const json& j) {
  if (j.is_string()) return arith::Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return arith::Rational(arith::from_i64(j.get<std::int64_t>()));
  if (j.is_object() && j.contains("num") && j.contains("den"))
    return arith::Rational(integer_from_json(j.at("num"), "num"), integer_from_json(j.at("den"), "den"));
  throw std::invalid_argument("expected a rational: {\"num\": ..., \"den\": ...} or \"n/d\"");
}

json pair_json(const pairs::PrimePair& pair) {
  return {{"kind", "pair"},
          {"p", pair.p.get_str()},
          {"p_mod_8", pair.residue_class},
          {"q", pair.q.get_str()},
          {"in_theorem_scope", pair.in_theorem_scope()}};
}

json certificate_json(const descent::RankResult& r) {
  const auto curve = curve::curve_from_pair(r.pair);
  json cosets = json::array();
  for (const auto& o : r.outcomes) cosets.push_back(outcome_json(o));
  return {{"kind", "rank-certificate"},
          {"p", r.pair.p.get_str()},
          {"q", r.pair.q.get_str()},
          {"p_mod_8", r.pair.residue_class},
          {"curve", curve.equation()},
          {"torsion", torsion_json(r.torsion)},
          {"rank",
           {{"lower", r.lower},
            {"upper", r.upper},
            {"certified", r.certified},
            {"image_size_bound", r.image_size_bound}}},
          {"cosets", std::move(cosets)}};
}

json triangle_json(const dioph::HeronTriangle& tri) {
  return {{"a", rational_json(tri.a)},
          {"b", rational_json(tri.b)},
          {"c", rational_json(tri.c)},
          {"p", tri.p.get_str()}};
}

json solution_json(const dioph::DiophSolution& sol) {
  return {{"x", sol.x.get_str()}, {"y", sol.y.get_str()}, {"z", sol.z.get_str()}, {"p", sol.p.get_str()}};
}

json verification_json(const dioph::VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json j = {{"all_passed", report.all_passed()}, {"isosceles", report.isosceles}, {"checks", std::move(checks)}};
  if (report.cos_theta) j["cos_theta"] = rational_json(*report.cos_theta);
  if (report.sin_theta) j["sin_theta"] = rational_json(*report.sin_theta);
  if (report.area) j["area"] = rational_json(*report.area);
  if (report.tan_half) j["tan_half_theta"] = rational_json(*report.tan_half);
  return j;
}

dioph::HeronTriangle triangle_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("triangle JSON must be an object");
  for (const char* key : {"a", "b", "c", "p"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("triangle JSON is missing '") + key + "'");
  }
  return {rational_from_json(j.at("a")), rational_from_json(j.at("b")), rational_from_json(j.at("c")),
          integer_from_json(j.at("p"), "p")};
}

void write_certificate(std::ostream& os, const descent::RankResult& r, Format format) {
  if (format == Format::JsonLines) {
    os << certificate_json(r).dump() << '\n';
    return;
  }
  if (format == Format::Csv) {
    for (const auto& o : r.outcomes) {
      os << r.pair.p << ',' << o.candidate.representative.label() << ','
         << descent::verdict_name(o.verdict) << ',';
      if (o.reason) os << o.reason->symbol;
      if (o.witness)
        os << o.witnessed_pair.label() << ' ' << o.witness->r1 << ' ' << o.witness->r2 << ' '
           << o.witness->r3 << ' ' << o.witness->s;
      os << '\n';
    }
    return;
  }

  const auto curve = curve::curve_from_pair(r.pair);
  os << "# Rank certificate for p = " << r.pair.p << "\n\n";
  os << "- q = " << r.pair.q << ", p mod 8 = " << r.pair.residue_class << '\n';
  os << "- curve: " << curve.equation() << '\n';
  os << "- torsion: " << torsion_label(r.torsion);
  if (r.torsion.witness_ell != 0) {
    os << " (counts";
    for (const auto& [ell, count] : r.torsion.counts) os << " #E(F_" << ell << ")=" << count;
    os << ")";
  }
  os << '\n';
  os << "- rank: ";
  if (r.certified)
    os << r.lower << " (certified)";
  else
    os << "between " << r.lower << " and " << r.upper;
  os << ", #Im <= " << r.image_size_bound << "\n\n";
  os << "| coset | verdict | reason / witness |\n|---|---|---|\n";
  for (const auto& o : r.outcomes) {
    os << "| " << o.candidate.representative.label() << " | " << descent::verdict_name(o.verdict) << " | ";
    if (o.reason) os << o.reason->symbol << " (mod " << o.reason->modulus << ")";
    if (o.witness)
      os << o.witnessed_pair.label() << ": (r1,r2,r3,s) = (" << o.witness->r1 << ", " << o.witness->r2
         << ", " << o.witness->r3 << ", " << o.witness->s << "), x = " << o.point->x;
    if (o.verdict == DescentOutcome::Verdict::Unresolved) os << "no witness up to " << o.search_bound;
    os << " |\n";
  }
}

void write_verification(std::ostream& os, const dioph::HeronTriangle& tri,
                        const dioph::VerificationReport& report, Format format) {
  if (format == Format::JsonLines) {
    json j = {{"kind", "verification"}, {"triangle", triangle_json(tri)}};
    j.update(verification_json(report));
    os << j.dump() << '\n';
    return;
  }
  if (format == Format::Csv) {
    for (const auto& c : report.checks) os << '"' << c.name << "\"," << (c.passed ? "pass" : "fail") << '\n';
    return;
  }
  os << "Triangle a = " << tri.a << ", b = " << tri.b << ", c = " << tri.c << ", p = " << tri.p << '\n';
  for (const auto& c : report.checks)
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "  (" << c.detail << ")\n";
  if (report.isosceles) os << "  note: isosceles\n";
}

}  // namespace heron::report
