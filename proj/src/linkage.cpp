#include "supero/linkage.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace supero {

AtypicalityData atypicality(const WeightVector& lam) {
  AtypicalityData out;
  std::vector<bool> q_used(lam.q.size(), false), r_used(lam.r.size(), false);
  // collect shared values ascending, then match lowest free indices first
  std::vector<int> values;
  for (int v : lam.q) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int v : values) {
    while (true) {
      int qi = -1, rj = -1;
      for (size_t i = 0; i < lam.q.size(); ++i)
        if (!q_used[i] && lam.q[i] == v) {
          qi = (int)i;
          break;
        }
      for (size_t j = 0; j < lam.r.size(); ++j)
        if (!r_used[j] && lam.r[j] == v) {
          rj = (int)j;
          break;
        }
      if (qi < 0 || rj < 0) break;
      q_used[qi] = true;
      r_used[rj] = true;
      out.pairs.emplace_back(qi + 1, rj + 1);
      ++out.degree;
    }
  }
  return out;
}

BlockId block_id(const WeightVector& lam) {
  AtypicalityData at = atypicality(lam);
  BlockId out;
  out.shape = lam.shape;
  out.degree = at.degree;
  std::vector<bool> q_used(lam.q.size(), false), r_used(lam.r.size(), false);
  for (auto [qi, rj] : at.pairs) {
    q_used[qi - 1] = true;
    r_used[rj - 1] = true;
  }
  for (size_t i = 0; i < lam.q.size(); ++i)
    if (!q_used[i]) out.core_q.push_back(lam.q[i]);
  for (size_t j = 0; j < lam.r.size(); ++j)
    if (!r_used[j]) out.core_r.push_back(lam.r[j]);
  std::sort(out.core_q.begin(), out.core_q.end());
  std::sort(out.core_r.begin(), out.core_r.end());
  return out;
}

bool is_linked(const WeightVector& a, const WeightVector& b) {
  if (a.shape != b.shape) throw std::invalid_argument("weight shapes differ");
  return block_id(a) == block_id(b);
}

bool bruhat_leq(const WeightVector& mu, const WeightVector& lam) {
  if (!is_linked(mu, lam)) return false;
  auto coeff = simple_root_coefficients(lam.shape, lam - mu);
  if (!coeff) return false;
  return std::all_of(coeff->begin(), coeff->end(), [](int c) { return c >= 0; });
}

namespace {

struct Box {
  int lo = 0, hi = 0;
  bool contains(const WeightVector& w) const {
    for (int v : w.q)
      if (v < lo || v > hi) return false;
    for (int v : w.r)
      if (v < lo || v > hi) return false;
    return true;
  }
};

}  // namespace

std::set<WeightVector> linkage_closure(const WeightVector& a, int lo, int hi) {
  Box box{lo, hi};
  if (!box.contains(a)) throw std::invalid_argument("weight outside closure box");
  const auto wg = weyl_elements(a.shape);
  const auto odd = positive_odd_roots(a.shape);
  std::set<WeightVector> seen{a};
  std::deque<WeightVector> queue{a};
  while (!queue.empty()) {
    WeightVector cur = queue.front();
    queue.pop_front();
    auto visit = [&](const WeightVector& next) {
      if (!box.contains(next)) return;
      if (seen.insert(next).second) queue.push_back(next);
    };
    for (const WeylElement& w : wg) visit(act(w, cur));
    for (const Root& beta : odd) {
      if (form(cur, beta) != 0) continue;
      // orthogonality is preserved along the beta line, so unit steps suffice
      WeightShift d = beta.shift();
      visit(cur + d);
      visit(cur - d);
    }
  }
  return seen;
}

bool linkage_oracle(const WeightVector& a, const WeightVector& b, int window) {
  if (a.shape != b.shape) throw std::invalid_argument("weight shapes differ");
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  int lo = a.q[0], hi = a.q[0];
  auto widen = [&](const WeightVector& w) {
    for (int v : w.q) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (int v : w.r) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  widen(a);
  widen(b);
  auto closure = linkage_closure(a, lo - window, hi + window);
  return closure.count(b) > 0;
}

}  // namespace supero
