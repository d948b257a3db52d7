// Certified lower bounds on Verma flags of projective covers.
//
// A weight is certified when one of six sufficient conditions produces it:
//   SELF  lam itself
//   C1    s_a lam for an even positive root a with <lam, a^> < 0
//   C2    chain images w lam with every step's pairing strictly negative
//   C3    lam + b for positive isotropic b with (lam, b) = 0
//   C4    negative-chain images of a C3 weight
//   C5    lam + b + g, (lam, b) = 0, (lam + b, g) = 0, ht(b) < ht(g)
//   C6    negative-chain images of a C5 weight
// Every certified weight appears in the flag of the projective cover.
#pragma once

#include <map>

#include "supero/flags.hpp"

namespace supero {

enum class CertTag { Self, C1, C2, C3, C4, C5, C6 };

const char* cert_tag_name(CertTag tag);

struct CertifiedSet {
  WeightVector lam;
  // first condition (in SELF..C6 order) that produced each weight
  std::map<WeightVector, CertTag> weights;

  VermaFlag as_flag() const;  // every certified weight once
};

CertifiedSet certified_weights(const WeightVector& lam);

// |certified_weights(lam)|, a lower bound on the flag length
int min_flag_length(const WeightVector& lam);

}  // namespace supero
