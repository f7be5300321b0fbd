#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tkms/numeric.hpp"

namespace tkms {

/// Exact polynomials in the two weight indeterminates x1 = e^{-beta r1} and
/// x2 = e^{-beta r2}, rational coefficients, normalized (no zero terms).
class Polynomial2 {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  Polynomial2() = default;
  Polynomial2(int c) { set(0, 0, Rational(c)); }                  // NOLINT: implicit by design
  Polynomial2(const Rational& c) { set(0, 0, c); }                // NOLINT
  static Polynomial2 monomial(unsigned e1, unsigned e2, const Rational& c = Rational(1)) {
    Polynomial2 p;
    p.set(e1, e2, c);
    return p;
  }
  static Polynomial2 x1() { return monomial(1, 0); }
  static Polynomial2 x2() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Polynomial2 operator+(const Polynomial2& o) const;
  Polynomial2 operator-(const Polynomial2& o) const;
  Polynomial2 operator*(const Polynomial2& o) const;
  Polynomial2 operator-() const;
  Polynomial2& operator+=(const Polynomial2& o) { return *this = *this + o; }
  Polynomial2& operator-=(const Polynomial2& o) { return *this = *this - o; }
  Polynomial2& operator*=(const Polynomial2& o) { return *this = *this * o; }
  bool operator==(const Polynomial2& o) const { return terms_ == o.terms_; }

  Rational eval(const Rational& x1, const Rational& x2) const;

  /// Lexicographic in (e1, e2), e.g. "1 - 2*x1 - 6*x2 + 12*x1*x2".
  std::string str() const;

 private:
  void set(unsigned e1, unsigned e2, const Rational& c) {
    Rational canonical = c;
    canonical.canonicalize();  // guard against num/den-constructed input
    if (canonical != 0) terms_[{e1, e2}] = canonical;
  }
  std::map<Exponents, Rational> terms_;
};

/// Quotient of two Polynomial2; the representation is not reduced, equality is
/// by cross multiplication.
class RationalFunction2 {
 public:
  RationalFunction2() : num_(), den_(1) {}
  RationalFunction2(int c) : num_(c), den_(1) {}            // NOLINT
  RationalFunction2(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction2(Polynomial2 num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RationalFunction2(Polynomial2 num, Polynomial2 den);

  static RationalFunction2 x1() { return RationalFunction2(Polynomial2::x1()); }
  static RationalFunction2 x2() { return RationalFunction2(Polynomial2::x2()); }

  const Polynomial2& num() const { return num_; }
  const Polynomial2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction2 operator+(const RationalFunction2& o) const;
  RationalFunction2 operator-(const RationalFunction2& o) const;
  RationalFunction2 operator*(const RationalFunction2& o) const;
  RationalFunction2 operator/(const RationalFunction2& o) const;
  RationalFunction2 operator-() const;
  RationalFunction2& operator+=(const RationalFunction2& o) { return *this = *this + o; }
  RationalFunction2& operator-=(const RationalFunction2& o) { return *this = *this - o; }
  RationalFunction2& operator*=(const RationalFunction2& o) { return *this = *this * o; }
  RationalFunction2& operator/=(const RationalFunction2& o) { return *this = *this / o; }

  RationalFunction2 inverse() const;

  /// f/g == p/q iff f*q == p*g.
  bool operator==(const RationalFunction2& o) const;

  /// Exact value; nullopt at a pole of this representation.
  std::optional<Rational> eval(const Rational& x1, const Rational& x2) const;

  std::string str() const;

 private:
  Polynomial2 num_, den_;
};

}  // namespace tkms
