#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tkms {

using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument on garbage.
Rational rational_from_string(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

inline double scalar_pow(double base, unsigned exp) {
  double r = 1.0;
  double b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}
inline Rational scalar_pow(const Rational& base, unsigned exp) { return rational_pow(base, exp); }

inline Rational scalar_from_bigint_as(const BigInt& n, const Rational&) { return Rational(n); }
inline double scalar_from_bigint_as(const BigInt& n, double) { return n.get_d(); }

/// A number carried through reports: optional exact value plus a double rendering.
struct NumberRef {
  std::optional<Rational> exact;
  double value = 0.0;

  static NumberRef from(const Rational& q) { return NumberRef{q, to_double(q)}; }
  static NumberRef from(double v) { return NumberRef{std::nullopt, v}; }
};

}  // namespace tkms
