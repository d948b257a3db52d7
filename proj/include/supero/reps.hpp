// Weights of the translation reps: V, V*, and super exterior powers of them.
// For gl(m|n), wedge^k V decomposes as  sum_{i+j=k} Lambda^i(even) (x) Sym^j(odd),
// so its weights are (i distinct deltas) + (a j-multiset of epsilons).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supero/lattice.hpp"

namespace supero {

struct RepKind {
  enum Base { Natural, Dual } base = Natural;
  int power = 1;  // wedge power, 1 <= power <= 3

  friend auto operator<=>(const RepKind&, const RepKind&) = default;
};

// the candidate order used throughout the deduction engine
inline const std::vector<RepKind> kRepKindOrder = {
    {RepKind::Natural, 1}, {RepKind::Dual, 1}, {RepKind::Natural, 2},
    {RepKind::Dual, 2},    {RepKind::Natural, 3}, {RepKind::Dual, 3},
};

// "V", "V*", "L2V", "L2V*", "L3V", "L3V*"
std::string rep_name(const RepKind& kind);
std::optional<RepKind> parse_rep(const std::string& name);

// Weights with multiplicity, in a fixed generation order: delta count i
// descending, delta subsets lexicographic, eps multisets lexicographic.
// All multiplicities are 1 for these shapes and powers.
struct WeightMultiset {
  std::vector<std::pair<WeightShift, int>> entries;
  int total() const;
};

WeightMultiset rep_weights(const AlgebraShape& shape, const RepKind& kind);

// sum_{i+j=k} C(m,i) C(n+j-1,j)
long long rep_dim(const AlgebraShape& shape, const RepKind& kind);

}  // namespace supero
