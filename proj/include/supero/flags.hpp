// Verma flag multisets and the operations the translation strategy needs.
#pragma once

#include <map>

#include "supero/linkage.hpp"
#include "supero/reps.hpp"

namespace supero {

// multiset of Verma labels with positive multiplicities, canonically ordered
struct VermaFlag {
  AlgebraShape shape;
  std::map<WeightVector, int> entries;

  VermaFlag() = default;
  explicit VermaFlag(AlgebraShape s) : shape(s) {}

  int total() const;
  int mult(const WeightVector& w) const;
  void add(const WeightVector& w, int k);

  bool subset_of(const VermaFlag& other) const;  // multiset containment
  VermaFlag minus(const VermaFlag& other) const;  // saturating multiset difference
  bool divisible_by(int k) const;
  VermaFlag divided_by(int k) const;

  friend auto operator<=>(const VermaFlag&, const VermaFlag&) = default;
};

// Flag of the projective cover of a typical weight: the Weyl images that lie
// Bruhat-above the weight, each with multiplicity one.
VermaFlag typical_projective(const WeightVector& lam);

// flag of (module with this flag) tensored with the rep: shift every entry by
// every rep weight, multiplicities multiplying
VermaFlag tensor_flag(const VermaFlag& flag, const RepKind& kind);

// keep the entries lying in the target block
VermaFlag project_block(const VermaFlag& flag, const BlockId& target);

// lam has multiplicity one and no other entry lies Bruhat-below it
bool unique_minimum(const VermaFlag& flag, const WeightVector& lam);

}  // namespace supero
