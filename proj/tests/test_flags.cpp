#include "supero/flags.hpp"

#include "doctest.h"
#include "supero/lattice.hpp"
#include "supero/linkage.hpp"
#include "supero/reps.hpp"

using namespace supero;

namespace {

const AlgebraShape G31{3, 1};
const AlgebraShape G22{2, 2};

WeightVector wv(AlgebraShape s, std::vector<int> q, std::vector<int> r) {
  return WeightVector(s, std::move(q), std::move(r));
}

}  // namespace

TEST_CASE("typical projective") {
  // dominant typical: a single Verma
  auto mu = wv(G22, {5, 3}, {4, 6});
  REQUIRE(atypicality(mu).degree == 0);
  REQUIRE(is_dominant(mu));
  auto p = typical_projective(mu);
  CHECK(p.total() == 1);
  CHECK(p.mult(mu) == 1);

  // regular antidominant typical: the whole orbit, all mult 1
  auto anti = wv(G31, {1, 2, 3}, {0});
  auto pa = typical_projective(anti);
  CHECK(pa.total() == 6);
  for (const auto& e : pa.entries) {
    CHECK(e.second == 1);
    CHECK(bruhat_leq(anti, e.first));
  }

  // singular antidominant: the orbit collapses to three distinct images
  auto sing = wv(G31, {0, 2, 2}, {5});
  auto ps = typical_projective(sing);
  CHECK(ps.total() == 3);
  CHECK(ps.mult(wv(G31, {2, 0, 2}, {5})) == 1);
  CHECK(ps.mult(wv(G31, {2, 2, 0}, {5})) == 1);

  // singular dominant: a single Verma again
  CHECK(typical_projective(wv(G31, {2, 2, 0}, {5})).total() == 1);

  CHECK_THROWS(typical_projective(wv(G31, {5, 3, 1}, {1})));
}

TEST_CASE("tensor and project, first worked projection") {
  int a = 5, b = 2, c = 0;
  auto lam = wv(G31, {a, b, c}, {c});
  auto mu = wv(G31, {a, b, c}, {c + 1});  // lambda - eps
  auto pmu = typical_projective(mu);
  REQUIRE(pmu.total() == 1);
  auto t = tensor_flag(pmu, RepKind{RepKind::Natural, 1});
  CHECK(t.total() == 4);
  auto pr = project_block(t, block_id(lam));
  CHECK(pr.total() == 2);
  CHECK(pr.mult(lam) == 1);
  CHECK(pr.mult(wv(G31, {a, b, c + 1}, {c + 1})) == 1);
  CHECK(unique_minimum(pr, lam));
}

TEST_CASE("unique minimum") {
  auto lam = wv(G31, {2, 1, 0}, {0});
  VermaFlag f(G31);
  f.add(lam, 1);
  f.add(wv(G31, {2, 1, 1}, {1}), 1);
  CHECK(unique_minimum(f, lam));

  // multiplicity above 1 at the head fails
  VermaFlag g(G31);
  g.add(lam, 2);
  CHECK(!unique_minimum(g, lam));

  // an incomparable entry is fine: only entries strictly below the head count
  VermaFlag h(G31);
  h.add(lam, 1);
  h.add(wv(G31, {2, 2, 0}, {1}), 1);
  CHECK(!bruhat_leq(lam, wv(G31, {2, 2, 0}, {1})));
  CHECK(unique_minimum(h, lam));

  // an entry strictly below the head fails
  auto head = wv(G31, {1, 0, 0}, {1});
  VermaFlag h2(G31);
  h2.add(head, 1);
  h2.add(wv(G31, {0, 0, 0}, {0}), 1);
  CHECK(!unique_minimum(h2, head));
}

TEST_CASE("flag arithmetic") {
  auto x = wv(G22, {1, 0}, {0, 1});
  auto y = wv(G22, {1, 1}, {1, 1});
  VermaFlag f(G22);
  f.add(x, 2);
  f.add(y, 4);
  CHECK(f.total() == 6);
  CHECK(f.mult(x) == 2);
  CHECK(f.mult(wv(G22, {9, 9}, {9, 9})) == 0);

  VermaFlag sub(G22);
  sub.add(x, 1);
  sub.add(y, 4);
  CHECK(sub.subset_of(f));
  CHECK(!f.subset_of(sub));

  auto rem = f.minus(sub);
  CHECK(rem.total() == 1);
  CHECK(rem.mult(x) == 1);

  CHECK(f.divisible_by(2));
  CHECK(!f.divisible_by(4));
  auto half = f.divided_by(2);
  CHECK(half.mult(x) == 1);
  CHECK(half.mult(y) == 2);

  CHECK_THROWS(f.add(x, -3));
  VermaFlag other(G31);
  CHECK_THROWS(other.add(wv(G22, {0, 0}, {0, 0}), 1));
}
