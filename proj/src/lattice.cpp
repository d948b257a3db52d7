#include "supero/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supero {

void check_shape(const AlgebraShape& shape) {
  if (shape.m < 1 || shape.m > 3 || shape.n < 1 || shape.n > 3)
    throw std::invalid_argument("algebra shape out of range, need 1 <= m,n <= 3");
}

WeightShift WeightShift::operator-() const {
  WeightShift out = *this;
  for (int& v : out.dq) v = -v;
  for (int& v : out.dr) v = -v;
  return out;
}

WeightVector::WeightVector(AlgebraShape s, std::vector<int> q_, std::vector<int> r_)
    : shape(s), q(std::move(q_)), r(std::move(r_)) {
  check_shape(shape);
  if ((int)q.size() != shape.m || (int)r.size() != shape.n)
    throw std::invalid_argument("weight arity does not match algebra shape");
}

WeightVector WeightVector::operator+(const WeightShift& d) const {
  if (d.dq.size() != q.size() || d.dr.size() != r.size())
    throw std::invalid_argument("shift arity does not match weight");
  WeightVector out = *this;
  for (size_t i = 0; i < q.size(); ++i) out.q[i] += d.dq[i];
  for (size_t j = 0; j < r.size(); ++j) out.r[j] += d.dr[j];
  return out;
}

WeightVector WeightVector::operator-(const WeightShift& d) const { return *this + (-d); }

WeightShift WeightVector::operator-(const WeightVector& other) const {
  if (shape != other.shape) throw std::invalid_argument("weight shapes differ");
  WeightShift d;
  d.dq.resize(q.size());
  d.dr.resize(r.size());
  for (size_t i = 0; i < q.size(); ++i) d.dq[i] = q[i] - other.q[i];
  for (size_t j = 0; j < r.size(); ++j) d.dr[j] = r[j] - other.r[j];
  return d;
}

WeightVector rho(const AlgebraShape& shape) {
  check_shape(shape);
  std::vector<int> q(shape.m), r(shape.n);
  for (int i = 0; i < shape.m; ++i) q[i] = shape.m - i;
  for (int j = 0; j < shape.n; ++j) r[j] = j + 1;
  return WeightVector(shape, std::move(q), std::move(r));
}

long long form(const WeightVector& a, const WeightVector& b) {
  if (a.shape != b.shape) throw std::invalid_argument("weight shapes differ");
  long long s = 0;
  for (size_t i = 0; i < a.q.size(); ++i) s += (long long)a.q[i] * b.q[i];
  for (size_t j = 0; j < a.r.size(); ++j) s -= (long long)a.r[j] * b.r[j];
  return s;
}

WeightVector Root::as_weight() const {
  std::vector<int> q(shape.m, 0), r(shape.n, 0);
  switch (kind) {
    case RootKind::EvenQQ:  // delta_i - delta_j
      q[i - 1] += 1;
      q[j - 1] -= 1;
      break;
    case RootKind::EvenRR:  // eps_i - eps_j stores as (r_i, r_j) = (-1, +1)
      r[i - 1] -= 1;
      r[j - 1] += 1;
      break;
    case RootKind::Odd:  // delta_i - eps_j
      q[i - 1] += 1;
      r[j - 1] += 1;
      break;
  }
  return WeightVector(shape, std::move(q), std::move(r));
}

WeightShift Root::shift() const {
  WeightVector w = as_weight();
  WeightShift d;
  d.dq = std::move(w.q);
  d.dr = std::move(w.r);
  return d;
}

std::vector<Root> positive_even_roots(const AlgebraShape& shape) {
  check_shape(shape);
  std::vector<Root> out;
  for (int i = 1; i <= shape.m; ++i)
    for (int j = i + 1; j <= shape.m; ++j) out.push_back({shape, RootKind::EvenQQ, i, j});
  for (int i = 1; i <= shape.n; ++i)
    for (int j = i + 1; j <= shape.n; ++j) out.push_back({shape, RootKind::EvenRR, i, j});
  return out;
}

std::vector<Root> positive_odd_roots(const AlgebraShape& shape) {
  check_shape(shape);
  std::vector<Root> out;
  for (int i = 1; i <= shape.m; ++i)
    for (int j = 1; j <= shape.n; ++j) out.push_back({shape, RootKind::Odd, i, j});
  return out;
}

std::vector<Root> positive_roots(const AlgebraShape& shape) {
  std::vector<Root> out = positive_even_roots(shape);
  std::vector<Root> odd = positive_odd_roots(shape);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

std::vector<Root> simple_roots(const AlgebraShape& shape) {
  check_shape(shape);
  std::vector<Root> out;
  for (int i = 1; i < shape.m; ++i) out.push_back({shape, RootKind::EvenQQ, i, i + 1});
  out.push_back({shape, RootKind::Odd, shape.m, 1});
  for (int j = 1; j < shape.n; ++j) out.push_back({shape, RootKind::EvenRR, j, j + 1});
  return out;
}

long long form(const WeightVector& a, const Root& alpha) { return form(a, alpha.as_weight()); }

long long coroot_pairing(const WeightVector& lam, const Root& alpha) {
  if (alpha.odd()) throw std::invalid_argument("coroot pairing needs an even root");
  if (lam.shape != alpha.shape) throw std::invalid_argument("weight and root shapes differ");
  // (alpha, alpha) = 2 on the q side, -2 on the r side
  if (alpha.kind == RootKind::EvenQQ) return lam.q[alpha.i - 1] - lam.q[alpha.j - 1];
  return lam.r[alpha.j - 1] - lam.r[alpha.i - 1];
}

WeightVector reflect(const WeightVector& lam, const Root& alpha) {
  if (alpha.odd()) throw std::invalid_argument("reflection needs an even root");
  if (lam.shape != alpha.shape) throw std::invalid_argument("weight and root shapes differ");
  WeightVector out = lam;
  if (alpha.kind == RootKind::EvenQQ)
    std::swap(out.q[alpha.i - 1], out.q[alpha.j - 1]);
  else
    std::swap(out.r[alpha.i - 1], out.r[alpha.j - 1]);
  return out;
}

int root_height(const Root& alpha) {
  // index distance in the concatenated order delta_1 < ... < delta_m < eps_1 < ... < eps_n
  switch (alpha.kind) {
    case RootKind::EvenQQ:
    case RootKind::EvenRR:
      return alpha.j - alpha.i;
    case RootKind::Odd:
      return alpha.shape.m - alpha.i + alpha.j;
  }
  return 0;
}

std::vector<WeylElement> weyl_elements(const AlgebraShape& shape) {
  check_shape(shape);
  std::vector<int> pq(shape.m), pr(shape.n);
  std::iota(pq.begin(), pq.end(), 0);
  std::iota(pr.begin(), pr.end(), 0);
  std::vector<WeylElement> out;
  std::vector<int> a = pq;
  do {
    std::vector<int> b = pr;
    do {
      out.push_back({a, b});
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

WeightVector act(const WeylElement& w, const WeightVector& lam) {
  if ((int)w.perm_q.size() != lam.shape.m || (int)w.perm_r.size() != lam.shape.n)
    throw std::invalid_argument("Weyl element arity does not match weight");
  WeightVector out = lam;
  for (size_t i = 0; i < w.perm_q.size(); ++i) out.q[i] = lam.q[w.perm_q[i]];
  for (size_t j = 0; j < w.perm_r.size(); ++j) out.r[j] = lam.r[w.perm_r[j]];
  return out;
}

bool is_dominant(const WeightVector& lam) {
  for (const Root& alpha : positive_even_roots(lam.shape))
    if (coroot_pairing(lam, alpha) < 0) return false;
  return true;
}

std::optional<std::vector<int>> simple_root_coefficients(const AlgebraShape& shape,
                                                         const WeightShift& diff) {
  check_shape(shape);
  if ((int)diff.dq.size() != shape.m || (int)diff.dr.size() != shape.n)
    throw std::invalid_argument("shift arity does not match algebra shape");
  long long sq = std::accumulate(diff.dq.begin(), diff.dq.end(), 0LL);
  long long sr = std::accumulate(diff.dr.begin(), diff.dr.end(), 0LL);
  if (sq != sr) return std::nullopt;
  // coefficient of the k-th simple root is the prefix sum of (dq_1..dq_m, -dr_1..-dr_n)
  // through position k; the final full sum is sq - sr = 0 and carries no coefficient
  std::vector<int> coeff;
  coeff.reserve(shape.m + shape.n - 1);
  long long run = 0;
  for (int i = 0; i < shape.m; ++i) {
    run += diff.dq[i];
    coeff.push_back((int)run);
  }
  for (int j = 0; j + 1 < shape.n; ++j) {
    run -= diff.dr[j];
    coeff.push_back((int)run);
  }
  return coeff;
}

std::string to_string(const WeightVector& lam) {
  std::ostringstream os;
  for (int i = 0; i < lam.shape.m; ++i) {
    if (i) os << ',';
    os << lam.q[i];
  }
  os << '|';
  for (int j = 0; j < lam.shape.n; ++j) {
    if (j) os << ',';
    os << lam.r[j];
  }
  return os.str();
}

namespace {

bool parse_int_list(const std::string& text, std::vector<int>& out) {
  out.clear();
  std::string cur;
  auto flush = [&]() -> bool {
    if (cur.empty()) return false;
    size_t pos = 0;
    try {
      int v = std::stoi(cur, &pos);
      if (pos != cur.size()) return false;
      out.push_back(v);
    } catch (...) {
      return false;
    }
    return true;
  };
  for (char c : text) {
    if (std::isspace((unsigned char)c)) continue;
    if (c == ',') {
      if (!flush()) return false;
      cur.clear();
    } else {
      cur += c;
    }
  }
  return flush();
}

}  // namespace

std::optional<WeightVector> parse_weight(const AlgebraShape& shape, const std::string& text) {
  size_t bar = text.find('|');
  if (bar == std::string::npos) return std::nullopt;
  std::vector<int> q, r;
  if (!parse_int_list(text.substr(0, bar), q)) return std::nullopt;
  if (!parse_int_list(text.substr(bar + 1), r)) return std::nullopt;
  if ((int)q.size() != shape.m || (int)r.size() != shape.n) return std::nullopt;
  return WeightVector(shape, std::move(q), std::move(r));
}

}  // namespace supero
