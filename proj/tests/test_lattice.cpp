#include "supero/lattice.hpp"

#include <random>
#include <set>

#include "doctest.h"

using namespace supero;

namespace {

const AlgebraShape G31{3, 1};
const AlgebraShape G22{2, 2};

WeightVector wv(AlgebraShape s, std::vector<int> q, std::vector<int> r) {
  return WeightVector(s, std::move(q), std::move(r));
}

}  // namespace

// Pins the r-side sign before anything else: tuples store lambda with the eps
// coefficients negated, so (a,b) = sum q q - sum r r.
TEST_CASE("form sign convention") {
  // delta_1 as a stored tuple
  auto d1 = wv(G31, {1, 0, 0}, {0});
  CHECK(form(d1, d1) == 1);
  // eps_1 as a stored tuple has r_1 = -1
  auto e1 = wv(G31, {0, 0, 0}, {-1});
  CHECK(form(e1, e1) == -1);
  // odd roots delta_i - eps_j store as (q_i, r_j) = (+1, +1) and are isotropic
  for (const Root& beta : positive_odd_roots(G31)) {
    auto w = beta.as_weight();
    CHECK(w.q[beta.i - 1] == 1);
    CHECK(w.r[beta.j - 1] == 1);
    CHECK(form(w, w) == 0);
  }
  for (const Root& beta : positive_odd_roots(G22)) CHECK(form(beta.as_weight(), beta.as_weight()) == 0);
}

TEST_CASE("rho") {
  CHECK(rho(G31) == wv(G31, {3, 2, 1}, {1}));
  CHECK(rho(G22) == wv(G22, {2, 1}, {1, 2}));
  CHECK(rho(AlgebraShape{1, 1}) == wv(AlgebraShape{1, 1}, {1}, {1}));
  CHECK(is_dominant(rho(G31)));
  CHECK(is_dominant(rho(G22)));
}

TEST_CASE("coroot pairing") {
  // (.,.|b+1,a+1) against eps_1 - eps_2 pairs to a - b
  int a = 5, b = 3;
  auto lam = wv(G22, {9, 9}, {b + 1, a + 1});
  Root alpha{G22, RootKind::EvenRR, 1, 2};
  CHECK(form(lam, alpha) == b - a);
  CHECK(coroot_pairing(lam, alpha) == a - b);
  Root aq{G22, RootKind::EvenQQ, 1, 2};
  CHECK(coroot_pairing(lam, aq) == 0);

  // generic agreement with 2 (lam, alpha) / (alpha, alpha)
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int t = 0; t < 200; ++t) {
    auto w = wv(G22, {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    for (const Root& r : positive_even_roots(G22)) {
      long long ff = form(r.as_weight(), r.as_weight());
      CHECK(coroot_pairing(w, r) * ff == 2 * form(w, r));
    }
  }
}

TEST_CASE("reflect is the coordinate swap and matches the formula") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const AlgebraShape& s : {G31, G22}) {
    for (int t = 0; t < 100; ++t) {
      std::vector<int> q(s.m), r(s.n);
      for (int& v : q) v = coord(rng);
      for (int& v : r) v = coord(rng);
      auto lam = wv(s, q, r);
      for (const Root& alpha : positive_even_roots(s)) {
        auto img = reflect(lam, alpha);
        CHECK(reflect(img, alpha) == lam);
        CHECK(form(img, img) == form(lam, lam));
        // s_a lam = lam - <lam, a^> a
        WeightShift d = alpha.shift();
        long long c = coroot_pairing(lam, alpha);
        WeightVector expect = lam;
        for (int i = 0; i < s.m; ++i) expect.q[i] -= (int)c * d.dq[i];
        for (int j = 0; j < s.n; ++j) expect.r[j] -= (int)c * d.dr[j];
        CHECK(img == expect);
      }
    }
  }
}

TEST_CASE("root heights") {
  CHECK(root_height(Root{G22, RootKind::Odd, 2, 1}) == 1);
  CHECK(root_height(Root{G22, RootKind::Odd, 1, 2}) == 3);
  CHECK(root_height(Root{G31, RootKind::Odd, 3, 1}) == 1);
  for (const AlgebraShape& s : {G31, G22}) {
    for (const Root& alpha : simple_roots(s)) CHECK(root_height(alpha) == 1);
    for (const Root& alpha : positive_roots(s)) {
      auto coeff = simple_root_coefficients(s, alpha.shift());
      REQUIRE(coeff.has_value());
      int sum = 0;
      for (int c : *coeff) {
        CHECK(c >= 0);
        CHECK(c <= 1);
        sum += c;
      }
      CHECK(sum == root_height(alpha));
    }
  }
}

TEST_CASE("weyl group") {
  CHECK(weyl_elements(G31).size() == 6);
  CHECK(weyl_elements(G22).size() == 4);
  CHECK(weyl_elements(AlgebraShape{3, 3}).size() == 36);
  auto lam = wv(G31, {5, 3, 1}, {2});
  auto ws = weyl_elements(G31);
  // identity comes first in lexicographic order
  CHECK(act(ws[0], lam) == lam);
  // orbit of a regular q is all 6 arrangements
  std::set<WeightVector> orbit;
  for (const auto& w : ws) orbit.insert(act(w, lam));
  CHECK(orbit.size() == 6);
  // form is Weyl invariant
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int t = 0; t < 100; ++t) {
    auto x = wv(G22, {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    auto y = wv(G22, {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    for (const auto& w : weyl_elements(G22)) CHECK(form(act(w, x), act(w, y)) == form(x, y));
  }
}

TEST_CASE("dominance") {
  int a = 5, b = 3;
  CHECK(is_dominant(wv(G22, {a, b}, {b + 1, a + 1})));
  CHECK(!is_dominant(wv(G22, {b, a}, {b + 1, a + 1})));
  CHECK(!is_dominant(wv(G22, {a, b}, {a + 1, b + 1})));

  // exhaustive-Weyl oracle: dominant iff no image sits strictly above in the
  // simple-root cone
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (const AlgebraShape& s : {G31, G22}) {
    for (int t = 0; t < 300; ++t) {
      std::vector<int> q(s.m), r(s.n);
      for (int& v : q) v = coord(rng);
      for (int& v : r) v = coord(rng);
      auto lam = wv(s, q, r);
      bool above = false;
      for (const auto& w : weyl_elements(s)) {
        auto img = act(w, lam);
        if (img == lam) continue;
        auto coeff = simple_root_coefficients(s, img - lam);
        if (!coeff) continue;
        bool nonneg = true, nonzero = false;
        for (int c : *coeff) {
          if (c < 0) nonneg = false;
          if (c != 0) nonzero = true;
        }
        if (nonneg && nonzero) above = true;
      }
      CHECK(is_dominant(lam) == !above);
    }
  }
}

TEST_CASE("simple root coefficients") {
  // reconstructing the shift from the coefficients is the inverse map
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const AlgebraShape& s : {G31, G22, AlgebraShape{1, 2}}) {
    auto simple = simple_roots(s);
    for (int t = 0; t < 200; ++t) {
      WeightShift d;
      d.dq.resize(s.m);
      d.dr.resize(s.n);
      for (int& v : d.dq) v = coord(rng);
      for (int& v : d.dr) v = coord(rng);
      long long sq = 0, sr = 0;
      for (int v : d.dq) sq += v;
      for (int v : d.dr) sr += v;
      auto coeff = simple_root_coefficients(s, d);
      if (sq != sr) {
        CHECK(!coeff.has_value());
        continue;
      }
      REQUIRE(coeff.has_value());
      REQUIRE(coeff->size() == simple.size());
      WeightShift rebuilt;
      rebuilt.dq.assign(s.m, 0);
      rebuilt.dr.assign(s.n, 0);
      for (size_t k = 0; k < simple.size(); ++k) {
        WeightShift a = simple[k].shift();
        for (int i = 0; i < s.m; ++i) rebuilt.dq[i] += (*coeff)[k] * a.dq[i];
        for (int j = 0; j < s.n; ++j) rebuilt.dr[j] += (*coeff)[k] * a.dr[j];
      }
      CHECK(rebuilt == d);
    }
  }
}

TEST_CASE("weight text format") {
  auto lam = wv(G31, {5, -3, 0}, {2});
  CHECK(to_string(lam) == "5,-3,0|2");
  CHECK(parse_weight(G31, "5,-3,0|2") == lam);
  CHECK(parse_weight(G31, " 5 , -3 , 0 | 2 ") == lam);
  CHECK(!parse_weight(G31, "5,-3|2").has_value());
  CHECK(!parse_weight(G31, "5,-3,0,1|2").has_value());
  CHECK(!parse_weight(G31, "5,x,0|2").has_value());
  CHECK(!parse_weight(G31, "5,3,0").has_value());
  CHECK(parse_weight(G22, "1,2|3,4") == wv(G22, {1, 2}, {3, 4}));
}
