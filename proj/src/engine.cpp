#include "supero/engine.hpp"

#include <sstream>
#include <stdexcept>

namespace supero {

const char* tactic_name(Tactic t) {
  switch (t) {
    case Tactic::AllCertified: return "T1_ALL_CERTIFIED";
    case Tactic::RemainderExclusion: return "T2_REMAINDER_EXCLUSION";
    case Tactic::CrossProjection: return "T3_CROSS_PROJECTION";
  }
  return "?";
}

namespace {

bool entries_bruhat_geq(const VermaFlag& flag, const WeightVector& lam) {
  for (const auto& [w, k] : flag.entries)
    if (!bruhat_leq(lam, w)) return false;
  return true;
}

std::vector<WeightVector> bruhat_minimal_support(const VermaFlag& flag) {
  std::vector<WeightVector> mins;
  for (const auto& [w, k] : flag.entries) {
    bool minimal = true;
    for (const auto& [v, kv] : flag.entries)
      if (v != w && bruhat_leq(v, w)) {
        minimal = false;
        break;
      }
    if (minimal) mins.push_back(w);
  }
  return mins;
}

// Every projective summand hiding inside R would contribute its own certified
// set, headed at a Bruhat-minimal entry of R. R is excluded as a sum of
// projective flags when no minimal entry theta fits: either the certified set
// of theta is larger than R or it is not contained in R.
bool remainder_excluded(const VermaFlag& remainder) {
  int total = remainder.total();
  for (const WeightVector& theta : bruhat_minimal_support(remainder)) {
    VermaFlag cert = certified_weights(theta).as_flag();
    if (cert.total() <= total && cert.subset_of(remainder)) return false;
  }
  return true;
}

}  // namespace

std::optional<VermaFlag> Engine::cover_flag(const WeightVector& mu, int depth,
                                            const WeightVector& lam) {
  if (atypicality(mu).degree == 0) return typical_projective(mu);
  if (depth > 0) return std::nullopt;  // one level of atypical intermediates only
  if (atypicality(mu).degree > atypicality(lam).degree) return std::nullopt;
  auto it = memo_inner_.find(mu);
  if (it != memo_inner_.end()) return it->second;
  DeductionOutcome sub = deduce_impl(mu, depth + 1);
  std::optional<VermaFlag> out;
  if (auto* ok = std::get_if<DeductionResult>(&sub)) out = ok->flag;
  memo_inner_.emplace(mu, out);
  return out;
}

DeductionOutcome Engine::deduce_impl(const WeightVector& lam, int depth) {
  const BlockId target = block_id(lam);
  const VermaFlag certified = certified_weights(lam).as_flag();

  struct Candidate {
    WeightVector mu;
    RepKind rep;
    VermaFlag projection;
  };
  std::vector<Candidate> admissible;  // unique-minimum projections, scan order
  int tried = 0;

  auto project_candidate = [&](const RepKind& kind,
                               const WeightShift& nu) -> std::optional<Candidate> {
    WeightVector mu = lam - nu;
    auto pmu = cover_flag(mu, depth, lam);
    if (!pmu) return std::nullopt;
    ++tried;
    VermaFlag f = project_block(tensor_flag(*pmu, kind), target);
    if (f.mult(lam) != 1 || !unique_minimum(f, lam)) return std::nullopt;
    return Candidate{std::move(mu), kind, std::move(f)};
  };

  // pass 1: collect every admissible projection in the fixed candidate order
  for (const RepKind& kind : kRepKindOrder)
    for (const auto& entry : rep_weights(lam.shape, kind).entries)
      if (auto cand = project_candidate(kind, entry.first)) admissible.push_back(std::move(*cand));

  // pass 2: close
  for (const Candidate& cand : admissible) {
    const VermaFlag& f = cand.projection;
    if (!entries_bruhat_geq(f, lam)) continue;  // cannot equal the flag of one cover
    if (!certified.subset_of(f))
      throw std::logic_error("certified weights escaped a unique-minimum projection");
    VermaFlag remainder = f.minus(certified);
    if (remainder.entries.empty()) {
      DeductionResult res{lam, f, {}};
      res.trace.push_back({cand.mu, cand.rep, f, Tactic::AllCertified, ""});
      return res;
    }
    if (remainder_excluded(remainder)) {
      std::ostringstream note;
      note << "remainder of " << remainder.total() << " cannot split off";
      DeductionResult res{lam, f, {}};
      res.trace.push_back({cand.mu, cand.rep, f, Tactic::RemainderExclusion, note.str()});
      return res;
    }
    if (depth > 0) continue;  // cross projection only at the top level
    // scan for a partner projection equal to k copies of a common flag; the
    // partner fails the unique-minimum gate (lam appears k >= 2 times), so
    // rescan raw projections rather than the admissible list
    for (const RepKind& kind : kRepKindOrder) {
      for (const auto& entry : rep_weights(lam.shape, kind).entries) {
        WeightVector mu2 = lam - entry.first;
        auto pmu2 = cover_flag(mu2, depth, lam);
        if (!pmu2) continue;
        VermaFlag f2 = project_block(tensor_flag(*pmu2, kind), target);
        int k = f2.mult(lam);
        if (k < 2 || !f2.divisible_by(k)) continue;
        VermaFlag g = f2.divided_by(k);
        if (!unique_minimum(g, lam)) continue;
        if (!entries_bruhat_geq(g, lam)) continue;
        if (!certified.subset_of(g) || !g.subset_of(f)) continue;
        std::ostringstream note;
        note << "partner projection is " << k << " copies of the flag";
        DeductionResult res{lam, g, {}};
        res.trace.push_back({cand.mu, cand.rep, f, Tactic::CrossProjection,
                             "projection kept the flag ambiguous"});
        res.trace.push_back({mu2, kind, f2, Tactic::CrossProjection, note.str()});
        return res;
      }
    }
  }

  AmbiguousResult amb{lam, certified, std::nullopt, tried};
  for (const Candidate& cand : admissible)
    if (!amb.upper || cand.projection.total() < amb.upper->total())
      amb.upper = cand.projection;
  return amb;
}

DeductionOutcome Engine::deduce_projective(const WeightVector& lam) {
  if (atypicality(lam).degree == 0)
    throw std::invalid_argument("deduce_projective needs an atypical weight");
  auto it = memo_top_.find(lam);
  if (it != memo_top_.end()) return it->second;
  DeductionOutcome out = deduce_impl(lam, 0);
  memo_top_.emplace(lam, out);
  return out;
}

VermaFlag Engine::projective_flag(const WeightVector& lam) {
  if (atypicality(lam).degree == 0) return typical_projective(lam);
  DeductionOutcome out = deduce_projective(lam);
  if (auto* ok = std::get_if<DeductionResult>(&out)) return ok->flag;
  throw std::runtime_error("projective cover flag is ambiguous for " + to_string(lam));
}

VermaFlag Engine::deduce_with_hint(const WeightVector& lam, const WeightVector& mu,
                                   const RepKind& rep) {
  VermaFlag pmu;
  if (atypicality(mu).degree == 0) {
    pmu = typical_projective(mu);
  } else {
    DeductionOutcome sub = deduce_projective(mu);
    auto* ok = std::get_if<DeductionResult>(&sub);
    if (!ok) throw std::runtime_error("hint cover is not deducible: " + to_string(mu));
    pmu = ok->flag;
  }
  VermaFlag f = project_block(tensor_flag(pmu, rep), block_id(lam));
  if (f.mult(lam) == 0)
    throw std::runtime_error("hint projection does not contain " + to_string(lam));
  return f;
}

}  // namespace supero
