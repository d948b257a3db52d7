// Integral weight lattice of gl(m|n), 1 <= m,n <= 3, in rho-shifted coordinates.
//
// A tuple (q_1..q_m | r_1..r_n) stores the weight  sum q_i delta_i - sum r_j eps_j.
// Consequently the bilinear form on stored tuples is
//   (a, b) = sum q_i(a) q_i(b) - sum r_j(a) r_j(b),
// adding the weight eps_j to a tuple decrements r_j, and a root delta_i - eps_j
// is the displacement (q_i += 1, r_j += 1).
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supero {

struct AlgebraShape {
  int m = 0;  // number of delta coordinates
  int n = 0;  // number of eps coordinates

  friend auto operator<=>(const AlgebraShape&, const AlgebraShape&) = default;
};

// throws std::invalid_argument unless 1 <= m,n <= 3
void check_shape(const AlgebraShape& shape);

// Displacement between stored tuples; adding a root or a rep weight is one of these.
struct WeightShift {
  std::vector<int> dq, dr;

  friend auto operator<=>(const WeightShift&, const WeightShift&) = default;
  WeightShift operator-() const;
};

struct WeightVector {
  AlgebraShape shape;
  std::vector<int> q, r;

  WeightVector() = default;
  WeightVector(AlgebraShape s, std::vector<int> q_, std::vector<int> r_);

  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
  WeightVector operator+(const WeightShift& d) const;
  WeightVector operator-(const WeightShift& d) const;
  WeightShift operator-(const WeightVector& other) const;  // this - other
};

// rho = (m, m-1, ..., 1 | 1, 2, ..., n), the standard dominant shift
WeightVector rho(const AlgebraShape& shape);

long long form(const WeightVector& a, const WeightVector& b);

enum class RootKind : uint8_t {
  EvenQQ,  // delta_i - delta_j, i < j
  EvenRR,  // eps_i - eps_j, i < j
  Odd,     // delta_i - eps_j (isotropic)
};

struct Root {
  AlgebraShape shape;
  RootKind kind;
  int i = 0, j = 0;  // 1-based

  bool odd() const { return kind == RootKind::Odd; }
  // the root as a stored tuple; also the displacement that adds it
  WeightVector as_weight() const;
  WeightShift shift() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

std::vector<Root> positive_roots(const AlgebraShape& shape);
std::vector<Root> positive_even_roots(const AlgebraShape& shape);
std::vector<Root> positive_odd_roots(const AlgebraShape& shape);
// delta_1-delta_2, ..., delta_m-eps_1, eps_1-eps_2, ... (m+n-1 roots)
std::vector<Root> simple_roots(const AlgebraShape& shape);

long long form(const WeightVector& a, const Root& alpha);

// 2 (lam, alpha) / (alpha, alpha); alpha must be even
long long coroot_pairing(const WeightVector& lam, const Root& alpha);

// s_alpha lam for even alpha: swaps the two coordinates on alpha's side
WeightVector reflect(const WeightVector& lam, const Root& alpha);

// sum of the simple-root coefficients; 1 exactly on the fundamental system
int root_height(const Root& alpha);

// Weyl group S_m x S_n acting by coordinate permutation.
// perm_q[i] = source position of coordinate i (0-based): act(w, lam).q[i] = lam.q[w.perm_q[i]].
struct WeylElement {
  std::vector<int> perm_q, perm_r;

  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

// all m! * n! elements, lexicographic in (perm_q, perm_r)
std::vector<WeylElement> weyl_elements(const AlgebraShape& shape);

WeightVector act(const WeylElement& w, const WeightVector& lam);

// pairing with every positive even coroot nonnegative:
// q weakly decreasing and r weakly increasing
bool is_dominant(const WeightVector& lam);

// Coefficients of diff in the basis of simple roots, if diff lies in the root
// lattice (iff sum dq == sum dr); coefficients are prefix sums of
// (dq_1, ..., dq_m, -dr_1, ..., -dr_n).
std::optional<std::vector<int>> simple_root_coefficients(const AlgebraShape& shape,
                                                         const WeightShift& diff);

// text form "q1,q2,...|r1,r2,..."
std::string to_string(const WeightVector& lam);
std::optional<WeightVector> parse_weight(const AlgebraShape& shape, const std::string& text);

}  // namespace supero
