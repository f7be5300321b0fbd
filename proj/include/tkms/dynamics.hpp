#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "tkms/numeric.hpp"

namespace tkms {

/// The canonical internal parameter: x_i = e^{-beta r_i} in (0, 1].
template <class S>
struct WeightPoint {
  S x1;
  S x2;
  const S& operator[](int color) const { return color == 1 ? x1 : x2; }
};

/// Dynamics given either as (r, beta) in floating point or as an exact weight
/// point; exact mode is authoritative wherever both exist.
struct Dynamics {
  std::optional<std::pair<double, double>> r;
  std::optional<double> beta;
  std::optional<WeightPoint<Rational>> exact_x;

  static Dynamics from_r_beta(double r1, double r2, double beta_) {
    if (r1 <= 0 || r2 <= 0 || beta_ <= 0)
      throw std::invalid_argument("dynamics requires r > 0 and beta > 0");
    Dynamics d;
    d.r = {r1, r2};
    d.beta = beta_;
    return d;
  }

  static Dynamics from_exact(Rational x1, Rational x2) {
    for (const Rational* x : {&x1, &x2})
      if (*x <= 0 || *x > 1) throw std::invalid_argument("weights must lie in (0, 1]");
    Dynamics d;
    d.exact_x = WeightPoint<Rational>{std::move(x1), std::move(x2)};
    return d;
  }

  bool exact() const { return exact_x.has_value(); }

  WeightPoint<double> float_x() const {
    if (exact_x) return {to_double(exact_x->x1), to_double(exact_x->x2)};
    return {std::exp(-(*beta) * r->first), std::exp(-(*beta) * r->second)};
  }
};

}  // namespace tkms
