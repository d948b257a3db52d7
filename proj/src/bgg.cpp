#include "supero/bgg.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "supero/engine.hpp"
#include "supero/linkage.hpp"
#include "supero/tables.hpp"

namespace supero {

int CompositionSeries::total() const {
  int t = 0;
  for (const auto& [w, k] : entries) t += k;
  return t;
}

int CompositionSeries::mult(const WeightVector& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

void CompositionSeries::add(const WeightVector& w, int k) {
  if (k <= 0) throw std::invalid_argument("CompositionSeries::add: nonpositive multiplicity");
  entries[w] += k;
}

namespace {

CompositionSeries transpose_once(const WeightVector& mu, int window, const FlagSource& source) {
  int lo = mu.q[0], hi = mu.q[0];
  for (int v : mu.q) lo = std::min(lo, v), hi = std::max(hi, v);
  for (int v : mu.r) lo = std::min(lo, v), hi = std::max(hi, v);
  lo -= window;
  hi += window;

  const BlockId target = block_id(mu);
  CompositionSeries out;
  out.shape = mu.shape;

  const int dims = mu.shape.m + mu.shape.n;
  std::vector<int> cur(dims, lo);
  while (true) {
    WeightVector lam(mu.shape, std::vector<int>(cur.begin(), cur.begin() + mu.shape.m),
                     std::vector<int>(cur.begin() + mu.shape.m, cur.end()));
    if (block_id(lam) == target && bruhat_leq(lam, mu)) {
      int k = source(lam).mult(mu);
      if (k > 0) out.add(lam, k);
    }
    int pos = 0;
    while (pos < dims && cur[pos] == hi) cur[pos++] = lo;
    if (pos == dims) break;
    ++cur[pos];
  }
  return out;
}

}  // namespace

CompositionSeries composition_series(const WeightVector& mu, int window, const FlagSource& source) {
  if (window < 1) throw std::invalid_argument("composition_series: window must be positive");
  CompositionSeries got = transpose_once(mu, window, source);
  if (got != transpose_once(mu, window + 1, source))
    throw std::runtime_error("composition_series: unstable at window " + std::to_string(window) +
                             " for " + to_string(mu));
  return got;
}

CompositionSeries composition_series(const WeightVector& mu, int window) {
  auto eng = std::make_shared<Engine>();
  FlagSource source = [eng](const WeightVector& lam) {
    if (lam.shape == AlgebraShape{2, 2} && atypicality(lam).degree == 2) return table_gl22(lam);
    return eng->projective_flag(lam);
  };
  return composition_series(mu, window, source);
}

}  // namespace supero
