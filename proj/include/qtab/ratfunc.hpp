#pragma once

#include "qtab/qpoly.hpp"

namespace qtab {

/// Element of Q(q) stored as a reduced quotient of integer polynomials.
///
/// Canonical form: gcd(num, den) has been divided out (as a primitive
/// polynomial), then the common integer content of num and den; den has a
/// positive leading coefficient. Zero is 0/1. Equal values are equal as
/// coefficient vectors.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num) : num_(std::move(num)), den_(1) { normalize(); }  // NOLINT
  RatFunc(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1.
  bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Throws DivisionByZero when the denominator vanishes at x.
  Rational eval(const Rational& x) const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

}  // namespace qtab
