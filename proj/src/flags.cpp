#include "supero/flags.hpp"

#include <stdexcept>

namespace supero {

int VermaFlag::total() const {
  int t = 0;
  for (const auto& [w, k] : entries) t += k;
  return t;
}

int VermaFlag::mult(const WeightVector& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

void VermaFlag::add(const WeightVector& w, int k) {
  if (k == 0) return;
  if (w.shape != shape) throw std::invalid_argument("flag entry shape mismatch");
  int& slot = entries[w];
  slot += k;
  if (slot < 0) throw std::invalid_argument("flag multiplicity went negative");
  if (slot == 0) entries.erase(w);
}

bool VermaFlag::subset_of(const VermaFlag& other) const {
  for (const auto& [w, k] : entries)
    if (other.mult(w) < k) return false;
  return true;
}

VermaFlag VermaFlag::minus(const VermaFlag& other) const {
  VermaFlag out(shape);
  for (const auto& [w, k] : entries) {
    int rem = k - other.mult(w);
    if (rem > 0) out.add(w, rem);
  }
  return out;
}

bool VermaFlag::divisible_by(int k) const {
  for (const auto& [w, m] : entries)
    if (m % k != 0) return false;
  return true;
}

VermaFlag VermaFlag::divided_by(int k) const {
  VermaFlag out(shape);
  for (const auto& [w, m] : entries) out.add(w, m / k);
  return out;
}

VermaFlag typical_projective(const WeightVector& lam) {
  if (atypicality(lam).degree != 0)
    throw std::invalid_argument("typical_projective needs a typical weight");
  VermaFlag out(lam.shape);
  for (const WeylElement& w : weyl_elements(lam.shape)) {
    WeightVector img = act(w, lam);
    if (bruhat_leq(lam, img) && out.mult(img) == 0) out.add(img, 1);
  }
  return out;
}

VermaFlag tensor_flag(const VermaFlag& flag, const RepKind& kind) {
  WeightMultiset weights = rep_weights(flag.shape, kind);
  VermaFlag out(flag.shape);
  for (const auto& [w, k] : flag.entries)
    for (const auto& [d, dm] : weights.entries) out.add(w + d, k * dm);
  return out;
}

VermaFlag project_block(const VermaFlag& flag, const BlockId& target) {
  VermaFlag out(flag.shape);
  for (const auto& [w, k] : flag.entries)
    if (block_id(w) == target) out.add(w, k);
  return out;
}

bool unique_minimum(const VermaFlag& flag, const WeightVector& lam) {
  if (flag.mult(lam) != 1) return false;
  for (const auto& [w, k] : flag.entries) {
    if (w == lam) continue;
    if (bruhat_leq(w, lam)) return false;
  }
  return true;
}

}  // namespace supero
