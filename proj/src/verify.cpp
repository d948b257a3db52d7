#include "supero/verify.hpp"

#include <random>
#include <set>
#include <sstream>
#include <variant>

#include "supero/engine.hpp"
#include "supero/jantzen.hpp"

namespace supero {

namespace {

std::vector<WeightVector> box_grid(const AlgebraShape& s, int lo, int hi) {
  std::vector<WeightVector> grid;
  int span = hi - lo + 1, total = 1;
  for (int k = 0; k < s.m + s.n; ++k) total *= span;
  std::vector<int> q(s.m), r(s.n);
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < s.m; ++i) {
      q[i] = lo + c % span;
      c /= span;
    }
    for (int j = 0; j < s.n; ++j) {
      r[j] = lo + c % span;
      c /= span;
    }
    grid.emplace_back(s, q, r);
  }
  return grid;
}

// the atypical weights the reproduction sweeps drive the engine over
std::vector<WeightVector> engine_grid() {
  std::set<WeightVector> seen;
  std::vector<WeightVector> grid;
  const AlgebraShape g31{3, 1}, g22{2, 2};
  int c = 0;
  for (int a = c - 3; a <= c + 4; ++a)
    for (int b = c - 3; b <= a; ++b) {
      int arr[6][3] = {{a, b, c}, {b, a, c}, {a, c, b}, {b, c, a}, {c, a, b}, {c, b, a}};
      for (auto& t : arr) {
        WeightVector w(g31, {t[0], t[1], t[2]}, {c});
        if (seen.insert(w).second) grid.push_back(w);
      }
    }
  for (int a : {0, 3})
    for (int b = a - 3; b <= a; ++b) {
      WeightVector heads[4] = {WeightVector(g22, {a, b}, {b, a}), WeightVector(g22, {a, b}, {a, b}),
                               WeightVector(g22, {b, a}, {b, a}), WeightVector(g22, {b, a}, {a, b})};
      for (auto& w : heads)
        if (seen.insert(w).second) grid.push_back(w);
    }
  return grid;
}

SuiteResult linkage_suite() {
  SuiteResult s{"linkage-oracle", true, ""};
  long long pairs = 0, bad = 0;
  for (const AlgebraShape& shape : {AlgebraShape{3, 1}, AlgebraShape{2, 2}}) {
    auto grid = box_grid(shape, 0, 3);
    for (const auto& a : grid) {
      auto reach = linkage_closure(a, -3, 6);
      for (const auto& b : grid) {
        ++pairs;
        if (is_linked(a, b) != (reach.count(b) > 0)) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs on [0,3] boxes, " << bad << " mismatches";
  s.detail = d.str();
  s.pass = bad == 0;
  return s;
}

void flag_suites(SuiteResult& inv, SuiteResult& cert) {
  Engine eng;
  int flags = 0, bad_inv = 0, bad_cert = 0, ambiguous = 0;
  for (const auto& lam : engine_grid()) {
    auto out = eng.deduce_projective(lam);
    auto* res = std::get_if<DeductionResult>(&out);
    if (!res) {
      ++ambiguous;
      continue;
    }
    ++flags;
    const auto& flag = res->flag;
    bool ok = flag.mult(lam) == 1 && unique_minimum(flag, lam);
    for (const auto& [w, k] : flag.entries)
      if (k <= 0 || !bruhat_leq(lam, w)) ok = false;
    if (!ok) ++bad_inv;

    bool bounds = certified_weights(lam).as_flag().subset_of(flag);
    if (!res->trace.empty() && !flag.subset_of(res->trace.back().projection)) bounds = false;
    if (!bounds) ++bad_cert;
  }
  std::ostringstream di, dc;
  di << flags << " engine flags, " << bad_inv << " invariant failures, " << ambiguous
     << " ambiguous";
  dc << flags << " traces, " << bad_cert << " bound violations";
  inv = {"flag-invariants", bad_inv == 0 && ambiguous == 0, di.str()};
  cert = {"certified-bounds", bad_cert == 0 && ambiguous == 0, dc.str()};
}

SuiteResult rep_suite() {
  SuiteResult s{"rep-dimensions", true, ""};
  int checked = 0, bad = 0;
  for (const AlgebraShape& shape : {AlgebraShape{3, 1}, AlgebraShape{2, 2}}) {
    for (const auto& kind : kRepKindOrder) {
      ++checked;
      auto ws = rep_weights(shape, kind);
      if (ws.total() != rep_dim(shape, kind)) ++bad;
      for (const auto& [shift, k] : ws.entries)
        if (k != 1) ++bad;
    }
  }
  std::ostringstream d;
  d << checked << " rep/shape pairs, " << bad << " dimension mismatches";
  s.detail = d.str();
  s.pass = bad == 0;
  return s;
}

SuiteResult weyl_suite() {
  SuiteResult s{"weyl-invariance", true, ""};
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> coord(-5, 5);
  int bad = 0;
  for (const AlgebraShape& shape : {AlgebraShape{3, 1}, AlgebraShape{2, 2}}) {
    auto ws = weyl_elements(shape);
    for (int t = 0; t < 500; ++t) {
      std::vector<int> q(shape.m), r(shape.n);
      for (int& v : q) v = coord(rng);
      for (int& v : r) v = coord(rng);
      WeightVector lam(shape, q, r);
      int deg = atypicality(lam).degree;
      for (const auto& w : ws)
        if (atypicality(act(w, lam)).degree != deg) ++bad;
    }
  }
  std::ostringstream d;
  d << "1000 random weights under the full Weyl group, " << bad << " degree changes";
  s.detail = d.str();
  s.pass = bad == 0;
  return s;
}

}  // namespace

std::vector<SuiteResult> run_property_suites() {
  std::vector<SuiteResult> out;
  out.push_back(linkage_suite());
  SuiteResult inv, cert;
  flag_suites(inv, cert);
  out.push_back(inv);
  out.push_back(cert);
  out.push_back(rep_suite());
  out.push_back(weyl_suite());
  return out;
}

}  // namespace supero
