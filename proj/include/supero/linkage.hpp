// Atypicality, block classification and the Bruhat order on stored tuples.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "supero/lattice.hpp"

namespace supero {

struct AtypicalityData {
  int degree = 0;
  // matched (q index, r index), 1-based, greedy by value with lowest indices first
  std::vector<std::pair<int, int>> pairs;
};

// Two weights are linked iff their block ids are equal: same atypicality degree
// and the same leftover core multisets after removing the matched values.
struct BlockId {
  AlgebraShape shape;
  int degree = 0;
  std::vector<int> core_q, core_r;  // sorted ascending

  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

AtypicalityData atypicality(const WeightVector& lam);
BlockId block_id(const WeightVector& lam);
bool is_linked(const WeightVector& a, const WeightVector& b);

// mu <= lam: linked and lam - mu a nonnegative combination of simple roots
bool bruhat_leq(const WeightVector& mu, const WeightVector& lam);

// Independent linkage oracle: breadth-first closure of `a` under Weyl moves and
// unit steps along isotropic roots orthogonal to the current weight, with every
// coordinate confined to [lo, hi].
std::set<WeightVector> linkage_closure(const WeightVector& a, int lo, int hi);

// closure membership with the box [min coord - window, max coord + window]
// taken over both weights' coordinates
bool linkage_oracle(const WeightVector& a, const WeightVector& b, int window);

}  // namespace supero
