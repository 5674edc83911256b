#include <algorithm>
#include <bit>
#include <future>

#include "heron/descent.hpp"

namespace heron::descent {
namespace {

using Verdict = DescentOutcome::Verdict;

DescentOutcome resolve(const Candidate& cand, const PrimePair& pp, const curve::CurveParams& curve,
                       const RankOptions& options) {
  DescentOutcome out;
  out.candidate = cand;
  out.search_bound = options.search_bound;
  if (cand.index == 0) {
    out.verdict = Verdict::InTorsionImage;
    return out;
  }
  if (auto reason = obstruct(cand.representative, pp, options.local)) {
    out.verdict = Verdict::Obstructed;
    out.reason = std::move(reason);
    return out;
  }
  for (const DescentPair& member : cand.coset) {
    auto w = witness_search(member, pp, options.search_bound, options.search);
    if (!w) continue;
    curve::RationalPoint pt;
    try {
      pt = reconstruct_point(member, *w, curve);
    } catch (const std::invalid_argument& e) {
      throw InternalInconsistency(e.what());
    }
    if (!curve::is_on_curve(pt, curve) || curve::is_two_torsion(pt, curve) ||
        descent_image(pt, curve) != member)
      throw InternalInconsistency("witness for " + member.label() + " reconstructs a bad point");
    out.verdict = Verdict::Witnessed;
    out.witness = std::move(w);
    out.witnessed_pair = member;
    out.point = std::move(pt);
    return out;
  }
  out.verdict = Verdict::Unresolved;
  return out;
}

// Rank over F2 of a set of 4-bit vectors.
unsigned f2_rank(std::vector<unsigned> rows) {
  unsigned rank = 0;
  for (unsigned bit = 0; bit < 4; ++bit) {
    const unsigned mask = 1u << bit;
    auto pivot = std::find_if(rows.begin(), rows.end(), [&](unsigned r) { return (r & mask) != 0; });
    if (pivot == rows.end()) continue;
    const unsigned pv = *pivot;
    rows.erase(pivot);
    for (auto& r : rows) {
      if (r & mask) r ^= pv;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::string verdict_name(DescentOutcome::Verdict v) {
  switch (v) {
    case Verdict::InTorsionImage: return "in-torsion-image";
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Witnessed: return "witnessed";
    case Verdict::Unresolved: return "unresolved";
  }
  return "unknown";
}

RankResult rank_bounds(const PrimePair& pp, const RankOptions& options) {
  if (!pp.in_theorem_scope())
    throw OutOfScope("out of theorem scope: p = " + pp.p.get_str() + " is 1 mod 8");

  const curve::CurveParams curve = curve::curve_from_pair(pp);
  RankResult result;
  result.pair = pp;
  result.torsion = curve::certify_torsion(curve, options.torsion_ell_max);

  const auto candidates = candidate_pairs(curve);
  if (options.workers <= 1) {
    for (const auto& cand : candidates) result.outcomes.push_back(resolve(cand, pp, curve, options));
  } else {
    std::vector<std::future<DescentOutcome>> jobs;
    for (const auto& cand : candidates)
      jobs.push_back(std::async(std::launch::async, resolve, std::cref(cand), std::cref(pp),
                                std::cref(curve), std::cref(options)));
    for (auto& job : jobs) result.outcomes.push_back(job.get());
  }

  unsigned survivors = 0;
  std::vector<unsigned> witnessed;
  for (const auto& o : result.outcomes) {
    if (o.verdict == Verdict::Witnessed || o.verdict == Verdict::Unresolved) ++survivors;
    if (o.verdict == Verdict::Witnessed) witnessed.push_back(o.candidate.coset_bits());
  }
  const auto k = static_cast<unsigned>(std::countr_zero(std::bit_ceil(survivors + 1)));
  result.upper = k;
  result.image_size_bound = std::uint64_t{4} << k;
  result.lower = f2_rank(std::move(witnessed));
  result.certified = result.lower == result.upper;
  return result;
}

}  // namespace heron::descent
