#include "tkms/poly2.hpp"

#include <sstream>
#include <stdexcept>

namespace tkms {

Polynomial2 Polynomial2::operator+(const Polynomial2& o) const {
  Polynomial2 r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial2 Polynomial2::operator-() const {
  Polynomial2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial2 Polynomial2::operator-(const Polynomial2& o) const { return *this + (-o); }

Polynomial2 Polynomial2::operator*(const Polynomial2& o) const {
  Polynomial2 r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e{ea.first + eb.first, ea.second + eb.second};
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        Rational c = ca * cb;
        if (c != 0) r.terms_[e] = std::move(c);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Rational Polynomial2::eval(const Rational& x1, const Rational& x2) const {
  Rational r(0);
  for (const auto& [e, c] : terms_) r += c * rational_pow(x1, e.first) * rational_pow(x2, e.second);
  return r;
}

std::string Polynomial2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool has_var = e.first > 0 || e.second > 0;
    if (!has_var || abs != 1) os << rational_to_string(abs) << (has_var ? "*" : "");
    if (e.first > 0) {
      os << "x1";
      if (e.first > 1) os << "^" << e.first;
      if (e.second > 0) os << "*";
    }
    if (e.second > 0) {
      os << "x2";
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

RationalFunction2::RationalFunction2(Polynomial2 num, Polynomial2 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

RationalFunction2 RationalFunction2::operator+(const RationalFunction2& o) const {
  return RationalFunction2(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction2 RationalFunction2::operator-() const {
  RationalFunction2 r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction2 RationalFunction2::operator-(const RationalFunction2& o) const {
  return *this + (-o);
}

RationalFunction2 RationalFunction2::operator*(const RationalFunction2& o) const {
  return RationalFunction2(num_ * o.num_, den_ * o.den_);
}

RationalFunction2 RationalFunction2::operator/(const RationalFunction2& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by the zero rational function");
  return RationalFunction2(num_ * o.den_, den_ * o.num_);
}

RationalFunction2 RationalFunction2::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of the zero rational function");
  return RationalFunction2(den_, num_);
}

bool RationalFunction2::operator==(const RationalFunction2& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::optional<Rational> RationalFunction2::eval(const Rational& x1, const Rational& x2) const {
  Rational d = den_.eval(x1, x2);
  if (d == 0) return std::nullopt;
  return num_.eval(x1, x2) / d;
}

std::string RationalFunction2::str() const {
  if (den_ == Polynomial2(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace tkms
