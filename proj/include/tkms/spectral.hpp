#pragma once

#include <vector>

#include "tkms/matrix.hpp"
#include "tkms/numeric.hpp"
#include "tkms/skeleton.hpp"

namespace tkms {

/// Spectral radius of a nonnegative integer matrix. Exact (max diagonal) for
/// triangular matrices, Gelfand estimate by repeated squaring otherwise;
/// accurate to ~1e-12 relative either way.
double spectral_radius_estimate(const IntMat& a);

inline double spectral_radius(const TwoGraphSkeleton& g, int color) {
  return spectral_radius_estimate(g.matrix(color));
}

/// Exact three-way comparison of rho(A) against a rational threshold, decided
/// with Sturm chains on the characteristic polynomial. Returns -1, 0, +1 for
/// rho < t, rho = t, rho > t.
int compare_spectral_radius(const IntMat& a, const Rational& t);

/// Per-vertex upper bounds on sum_{n1+n2>cap} x1^{n1} x2^{n2} (column sum of
/// A1^{n1} A2^{n2}), from a Collatz-Wielandt weight vector. Entries are +inf
/// when no geometric ratio < 1 could be certified.
std::vector<double> column_sum_tail_bounds(const IntMat& a1, const IntMat& a2, double x1,
                                           double x2, std::uint32_t cap);

}  // namespace tkms
