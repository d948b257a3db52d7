// Deduction engine for Verma flags of projective covers at atypical weights.
//
// For each candidate (rep kind, rep weight nu) in a fixed order, set
// mu = lam - nu, obtain the flag of the projective cover of mu (directly if mu
// is typical, by one level of recursion if atypical), and project
// P_mu (x) rep onto lam's block. A projection F in which lam is the unique
// Bruhat-minimal entry contains the wanted flag as a summand; it is closed by
//   T1  every entry of F is certified: the flag is F
//   T2  the uncertified remainder cannot split off as projective covers
//   T3  a second projection equal to k copies of a flag G pins the flag to G
#pragma once

#include <optional>
#include <variant>

#include "supero/jantzen.hpp"

namespace supero {

enum class Tactic { AllCertified, RemainderExclusion, CrossProjection };

const char* tactic_name(Tactic t);

struct TraceStep {
  WeightVector mu;
  RepKind rep;
  VermaFlag projection;
  Tactic tactic;
  std::string notes;
};

struct DeductionResult {
  WeightVector lam;
  VermaFlag flag;
  std::vector<TraceStep> trace;
};

struct AmbiguousResult {
  WeightVector lam;
  VermaFlag lower;                 // certified weights, each once
  std::optional<VermaFlag> upper;  // smallest admissible projection seen, if any
  int candidates_tried = 0;
};

using DeductionOutcome = std::variant<DeductionResult, AmbiguousResult>;

class Engine {
 public:
  // lam must be atypical; closure is guaranteed for shapes 3x1 and 2x2,
  // other shapes may come back ambiguous
  DeductionOutcome deduce_projective(const WeightVector& lam);

  // flag of the projective cover for any weight: typical covers directly,
  // atypical ones through deduce_projective (throws if that is ambiguous)
  VermaFlag projective_flag(const WeightVector& lam);

  // replay one prescribed step: project P_mu (x) rep onto lam's block;
  // throws if P_mu is not computable or lam is absent from the projection
  VermaFlag deduce_with_hint(const WeightVector& lam, const WeightVector& mu,
                             const RepKind& rep);

 private:
  DeductionOutcome deduce_impl(const WeightVector& lam, int depth);
  std::optional<VermaFlag> cover_flag(const WeightVector& mu, int depth,
                                      const WeightVector& lam);

  std::map<WeightVector, DeductionOutcome> memo_top_;
  std::map<WeightVector, std::optional<VermaFlag>> memo_inner_;
};

}  // namespace supero
