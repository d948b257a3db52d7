#include "supero/jantzen.hpp"

#include <set>

namespace supero {

const char* cert_tag_name(CertTag tag) {
  switch (tag) {
    case CertTag::Self: return "SELF";
    case CertTag::C1: return "C1";
    case CertTag::C2: return "C2";
    case CertTag::C3: return "C3";
    case CertTag::C4: return "C4";
    case CertTag::C5: return "C5";
    case CertTag::C6: return "C6";
  }
  return "?";
}

VermaFlag CertifiedSet::as_flag() const {
  VermaFlag out(lam.shape);
  for (const auto& [w, tag] : weights) out.add(w, 1);
  return out;
}

namespace {

// all w nu reachable by chains of even reflections with strictly negative
// pairing at each step, excluding nu itself; chains are exhausted by
// deduplication (each step strictly raises the weight)
std::set<WeightVector> negative_chain_images(const WeightVector& nu) {
  const auto even = positive_even_roots(nu.shape);
  const size_t bound = weyl_elements(nu.shape).size();
  std::set<WeightVector> seen;
  std::vector<WeightVector> frontier{nu};
  while (!frontier.empty()) {
    std::vector<WeightVector> next;
    for (const WeightVector& cur : frontier)
      for (const Root& alpha : even) {
        if (coroot_pairing(cur, alpha) >= 0) continue;
        WeightVector img = reflect(cur, alpha);
        if (img == nu || !seen.insert(img).second) continue;
        next.push_back(img);
        if (seen.size() > bound) return seen;  // cannot happen: orbit bound
      }
    frontier = std::move(next);
  }
  return seen;
}

void record(CertifiedSet& cs, const WeightVector& w, CertTag tag) {
  cs.weights.emplace(w, tag);  // keeps the earliest tag
}

}  // namespace

CertifiedSet certified_weights(const WeightVector& lam) {
  CertifiedSet cs;
  cs.lam = lam;
  record(cs, lam, CertTag::Self);

  const auto even = positive_even_roots(lam.shape);
  const auto odd = positive_odd_roots(lam.shape);

  // C1/C2: chain images of lam; length-one chains are C1
  for (const Root& alpha : even)
    if (coroot_pairing(lam, alpha) < 0) record(cs, reflect(lam, alpha), CertTag::C1);
  for (const WeightVector& img : negative_chain_images(lam)) record(cs, img, CertTag::C2);

  // C3/C4: lam + beta for orthogonal isotropic beta, plus chain images
  for (const Root& beta : odd) {
    if (form(lam, beta) != 0) continue;
    WeightVector base = lam + beta.shift();
    record(cs, base, CertTag::C3);
    for (const WeightVector& img : negative_chain_images(base)) record(cs, img, CertTag::C4);
  }

  // C5/C6: lam + beta + gamma with (lam,beta) = (lam+beta,gamma) = 0 and
  // ht(beta) < ht(gamma), plus chain images
  for (const Root& beta : odd) {
    if (form(lam, beta) != 0) continue;
    WeightVector mid = lam + beta.shift();
    for (const Root& gamma : odd) {
      if (root_height(beta) >= root_height(gamma)) continue;
      if (form(mid, gamma) != 0) continue;
      WeightVector top = mid + gamma.shift();
      record(cs, top, CertTag::C5);
      for (const WeightVector& img : negative_chain_images(top)) record(cs, img, CertTag::C6);
    }
  }
  return cs;
}

int min_flag_length(const WeightVector& lam) {
  return (int)certified_weights(lam).weights.size();
}

}  // namespace supero
