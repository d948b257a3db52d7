// composition multiplicities of Verma modules, obtained by transposing
// projective Verma flags: [M_mu : L_lam] = (P_lam : M_mu)
#pragma once

#include <functional>
#include <map>

#include "supero/flags.hpp"

namespace supero {

struct CompositionSeries {
  AlgebraShape shape{0, 0};
  std::map<WeightVector, int> entries;  // L labels, positive multiplicities

  int total() const;
  int mult(const WeightVector& w) const;
  void add(const WeightVector& w, int k);
  friend bool operator==(const CompositionSeries&, const CompositionSeries&) = default;
};

// flag source: weight -> Verma flag of its projective cover
using FlagSource = std::function<VermaFlag(const WeightVector&)>;

// transpose over all lam <= mu in the block of mu whose coordinates stay
// within [min coord(mu) - window, max coord(mu) + window]; recomputes at
// window + 1 and throws std::runtime_error if the result is not stable
CompositionSeries composition_series(const WeightVector& mu, int window, const FlagSource& source);

// default source: gl(2|2) degree-2 weights read the reference tables, anything
// else falls back to the deduction engine (throws on an ambiguous deduction)
CompositionSeries composition_series(const WeightVector& mu, int window = 3);

}  // namespace supero
