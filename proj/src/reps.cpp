#include "supero/reps.hpp"

#include <stdexcept>

namespace supero {

std::string rep_name(const RepKind& kind) {
  std::string s = kind.power == 1 ? "V" : "L" + std::to_string(kind.power) + "V";
  if (kind.base == RepKind::Dual) s += "*";
  return s;
}

std::optional<RepKind> parse_rep(const std::string& name) {
  for (const RepKind& k : kRepKindOrder)
    if (rep_name(k) == name) return k;
  return std::nullopt;
}

int WeightMultiset::total() const {
  int t = 0;
  for (const auto& [w, mult] : entries) t += mult;
  return t;
}

namespace {

void check_kind(const RepKind& kind) {
  if (kind.power < 1 || kind.power > 3)
    throw std::invalid_argument("rep power out of range, need 1 <= k <= 3");
}

// size-i subsets of {0..m-1}, lexicographic
void delta_subsets(int m, int i, std::vector<std::vector<int>>& out) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)pick.size() == i) {
      out.push_back(pick);
      return;
    }
    for (int v = start; v < m; ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// size-j multisets of {0..n-1} as nondecreasing index tuples, lexicographic
void eps_multisets(int n, int j, std::vector<std::vector<int>>& out) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)pick.size() == j) {
      out.push_back(pick);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

WeightMultiset rep_weights(const AlgebraShape& shape, const RepKind& kind) {
  check_shape(shape);
  check_kind(kind);
  WeightMultiset out;
  int k = kind.power;
  for (int i = std::min(k, shape.m); i >= 0; --i) {
    int j = k - i;
    std::vector<std::vector<int>> dsets, esets;
    delta_subsets(shape.m, i, dsets);
    eps_multisets(shape.n, j, esets);
    for (const auto& ds : dsets)
      for (const auto& es : esets) {
        WeightShift d;
        d.dq.assign(shape.m, 0);
        d.dr.assign(shape.n, 0);
        for (int p : ds) d.dq[p] += 1;
        // adding eps_j decrements stored r_j; the dual negates everything
        for (int p : es) d.dr[p] -= 1;
        if (kind.base == RepKind::Dual) d = -d;
        out.entries.emplace_back(std::move(d), 1);
      }
  }
  return out;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

long long rep_dim(const AlgebraShape& shape, const RepKind& kind) {
  check_shape(shape);
  check_kind(kind);
  long long total = 0;
  for (int i = 0; i <= kind.power; ++i) {
    int j = kind.power - i;
    total += binom(shape.m, i) * binom(shape.n + j - 1, j);
  }
  return total;
}

}  // namespace supero
