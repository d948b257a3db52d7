#include "supero/jantzen.hpp"

#include <random>

#include "doctest.h"
#include "supero/lattice.hpp"
#include "supero/linkage.hpp"

using namespace supero;

namespace {

const AlgebraShape G31{3, 1};
const AlgebraShape G22{2, 2};

WeightVector wv(AlgebraShape s, std::vector<int> q, std::vector<int> r) {
  return WeightVector(s, std::move(q), std::move(r));
}

}  // namespace

TEST_CASE("certified set, two-term flag") {
  // q-dominant with one unpaired orthogonal direction: head plus one step
  auto lam = wv(G31, {5, 2, 0}, {0});
  auto cert = certified_weights(lam);
  CHECK(cert.lam == lam);
  REQUIRE(cert.weights.size() == 2);
  CHECK(cert.weights.at(lam) == CertTag::Self);
  CHECK(cert.weights.at(wv(G31, {5, 2, 1}, {1})) == CertTag::C3);
  CHECK(min_flag_length(lam) == 2);
}

TEST_CASE("certified set with a double step") {
  // (a,a-1|a,a-1) at a=3; the double step lands on (a+1,a|a,a+1)
  auto lam = wv(G22, {3, 2}, {3, 2});
  auto cert = certified_weights(lam);
  std::map<WeightVector, CertTag> expect{
      {lam, CertTag::Self},
      {wv(G22, {3, 2}, {2, 3}), CertTag::C1},
      {wv(G22, {4, 2}, {4, 2}), CertTag::C3},
      {wv(G22, {3, 3}, {3, 3}), CertTag::C3},
      {wv(G22, {4, 2}, {2, 4}), CertTag::C4},
      {wv(G22, {4, 3}, {3, 4}), CertTag::C5},
  };
  CHECK(cert.weights == expect);
  CHECK(min_flag_length(lam) == 6);
}

TEST_CASE("certified set, separated degree-2 weight") {
  auto lam = wv(G22, {3, 0}, {3, 0});
  auto cert = certified_weights(lam);
  std::map<WeightVector, CertTag> expect{
      {lam, CertTag::Self},
      {wv(G22, {3, 0}, {0, 3}), CertTag::C1},
      {wv(G22, {4, 0}, {4, 0}), CertTag::C3},
      {wv(G22, {3, 1}, {3, 1}), CertTag::C3},
      {wv(G22, {4, 0}, {0, 4}), CertTag::C4},
      {wv(G22, {3, 1}, {1, 3}), CertTag::C4},
  };
  CHECK(cert.weights == expect);
}

TEST_CASE("double step in gl(3|1)") {
  // beta = delta_2 - eps (height 2), gamma = delta_1 - eps (height 3);
  // both steps subtract eps, so the stored r coordinate rises by two
  auto lam = wv(G31, {1, 0, 5}, {0});
  auto cert = certified_weights(lam);
  auto it = cert.weights.find(wv(G31, {2, 1, 5}, {2}));
  REQUIRE(it != cert.weights.end());
  CHECK(it->second == CertTag::C5);
}

TEST_CASE("certified weights sit above the head inside its block") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (const AlgebraShape& s : {G31, G22}) {
    int done = 0;
    while (done < 60) {
      std::vector<int> q(s.m), r(s.n);
      for (int& v : q) v = coord(rng);
      for (int& v : r) v = coord(rng);
      auto lam = wv(s, q, r);
      if (atypicality(lam).degree == 0) continue;
      ++done;
      auto cert = certified_weights(lam);
      CHECK(cert.weights.count(lam) == 1);
      for (const auto& [w, tag] : cert.weights) {
        CHECK(is_linked(lam, w));
        CHECK(bruhat_leq(lam, w));
        if (w == lam) CHECK(tag == CertTag::Self);
      }
      CHECK(cert.as_flag().total() == (int)cert.weights.size());
    }
  }
}

TEST_CASE("tag names") {
  CHECK(cert_tag_name(CertTag::Self) == std::string("SELF"));
  CHECK(cert_tag_name(CertTag::C1) == std::string("C1"));
  CHECK(cert_tag_name(CertTag::C6) == std::string("C6"));
}
