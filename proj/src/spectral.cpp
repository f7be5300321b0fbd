#include "tkms/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace tkms {

namespace {

bool is_triangular(const IntMat& a) {
  bool upper = true, lower = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i > j && a(i, j) != 0) upper = false;
      if (i < j && a(i, j) != 0) lower = false;
    }
  return upper || lower;
}

int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Univariate polynomials over Rational, dense coefficients, constant first.
using Poly1 = std::vector<Rational>;

void trim(Poly1& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly1 add(const Poly1& a, const Poly1& b) {
  Poly1 r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly1 mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly1 negate(Poly1 p) {
  for (auto& c : p) c = -c;
  return p;
}

Poly1 derivative(const Poly1& p) {
  Poly1 r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
  return r;
}

Rational eval(const Poly1& p, const Rational& x) {
  Rational r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Poly1 rem(Poly1 a, const Poly1& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

// Quotient of exact division a / b (remainder known to be zero).
Poly1 quo(Poly1 a, const Poly1& b) {
  Poly1 q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

void normalize_monic(Poly1& p) {
  if (p.empty()) return;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly1 r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
    normalize_monic(b);
  }
  normalize_monic(a);
  return a;
}

// Quotient of p by (x - root); requires p(root) == 0.
Poly1 divide_linear(const Poly1& p, const Rational& root) {
  Poly1 q(p.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

int sign_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Number of distinct real roots of squarefree p strictly greater than t;
// requires p(t) != 0.
int sturm_roots_above(const Poly1& p, const Rational& t) {
  std::vector<Poly1> chain{p, derivative(p)};
  while (chain.back().size() > 1) {
    Poly1 r = negate(rem(chain[chain.size() - 2], chain.back()));
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_t, at_inf;
  for (const auto& q : chain) {
    if (q.empty()) continue;
    at_t.push_back(sgn(eval(q, t)));
    at_inf.push_back(sgn(q.back()));
  }
  return sign_variations(at_t) - sign_variations(at_inf);
}

// det(tI - A) by cofactor expansion along the first listed row.
Poly1 char_poly(const IntMat& a) {
  const std::size_t n = a.rows();
  Mat<Poly1> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly1 p{Rational(-a(i, j))};
      if (i == j) p.push_back(Rational(1));
      trim(p);
      m(i, j) = std::move(p);
    }
  std::function<Poly1(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) -> Poly1 {
    if (ri.size() == 1) return m(ri[0], ci[0]);
    Poly1 acc;
    for (std::size_t k = 0; k < ci.size(); ++k) {
      const Poly1& pivot = m(ri[0], ci[k]);
      if (pivot.empty()) continue;
      std::vector<std::size_t> sub_r(ri.begin() + 1, ri.end());
      std::vector<std::size_t> sub_c;
      for (std::size_t l = 0; l < ci.size(); ++l)
        if (l != k) sub_c.push_back(ci[l]);
      Poly1 term = mul(pivot, det(sub_r, sub_c));
      acc = add(acc, k % 2 == 0 ? term : negate(term));
    }
    return acc;
  };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

}  // namespace

double spectral_radius_estimate(const IntMat& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;
  if (is_triangular(a)) {
    BigInt best = 0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, a(i, i));
    return best.get_d();
  }
  Mat<double> b = to_doubles(a);
  double max0 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) max0 = std::max(max0, b(i, j));
  if (max0 == 0.0) return 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) /= max0;
  // b tracks A^{2^k} normalized to max entry 1; the accumulated log converges
  // to ln rho by Gelfand's formula.
  double log_rho = std::log(max0);
  double weight = 1.0;
  for (int k = 0; k < 64; ++k) {
    b = b * b;
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m = std::max(m, b(i, j));
    if (m == 0.0) return 0.0;  // nilpotent
    weight /= 2.0;
    log_rho += weight * std::log(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) /= m;
  }
  return std::exp(log_rho);
}

int compare_spectral_radius(const IntMat& a, const Rational& t) {
  if (a.rows() == 0) return t > 0 ? -1 : (t == 0 ? 0 : 1);
  if (sgn(t) < 0) return 1;  // rho >= 0 always
  Poly1 p = char_poly(a);
  Poly1 g = poly_gcd(p, derivative(p));
  Poly1 sf = g.size() <= 1 ? p : quo(p, g);
  normalize_monic(sf);
  const bool is_eigenvalue = eval(sf, t) == 0;
  Poly1 reduced = is_eigenvalue ? divide_linear(sf, t) : sf;
  int above = reduced.size() <= 1 ? 0 : sturm_roots_above(reduced, t);
  if (above > 0) return 1;
  return is_eigenvalue ? 0 : -1;
}

std::vector<double> column_sum_tail_bounds(const IntMat& a1, const IntMat& a2, double x1,
                                           double x2, std::uint32_t cap) {
  const std::size_t n = a1.rows();
  const double inf = std::numeric_limits<double>::infinity();
  if (n == 0) return {};
  Mat<double> b1 = to_doubles(a1), b2 = to_doubles(a2);
  Mat<double> step(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) step(i, j) = b1(i, j) + b2(i, j) + (i == j ? 1.0 : 0.0);
  // p = normalized 1^T step^k, strictly positive thanks to the +I term. Then
  // p A_i <= lambda_i p entrywise gives the Collatz-Wielandt growth bound
  // colsum_v(A1^{n1} A2^{n2}) <= (p_v / p_min) lambda_1^{n1} lambda_2^{n2}.
  std::vector<double> p(n, 1.0);
  const std::uint32_t iters = std::max<std::uint32_t>(cap, 64);
  for (std::uint32_t k = 0; k < iters; ++k) {
    p = mul_row(p, step);
    double m = *std::max_element(p.begin(), p.end());
    for (auto& v : p) v /= m;
  }
  auto collatz = [&](const Mat<double>& m) {
    std::vector<double> pm = mul_row(p, m);
    double lam = 0.0;
    for (std::size_t j = 0; j < n; ++j) lam = std::max(lam, pm[j] / p[j]);
    return lam * (1.0 + 1e-9);
  };
  const double q = std::max(x1 * collatz(b1), x2 * collatz(b2));
  std::vector<double> out(n, inf);
  if (!(q < 1.0)) return out;
  const double pmin = *std::min_element(p.begin(), p.end());
  // sum_{m>cap} (m+1) q^m = q^{cap+1} ((cap+2) - (cap+1) q) / (1-q)^2
  const double tail_sum =
      std::pow(q, cap + 1.0) * ((cap + 2.0) - (cap + 1.0) * q) / ((1.0 - q) * (1.0 - q));
  for (std::size_t v = 0; v < n; ++v) out[v] = (p[v] / pmin) * tail_sum;
  return out;
}

}  // namespace tkms
