#pragma once

#include <map>
#include <utility>

#include "qtab/qpoly.hpp"

namespace qtab {

/// Sparse polynomial in q and t. Keys are (q exponent, t exponent); zero
/// coefficients are never stored.
class QTPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;

  QTPoly() = default;
  QTPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QTPoly(const QPoly& p);

  static QTPoly monomial(const Integer& c, unsigned qexp, unsigned texp);
  static QTPoly t_power(unsigned texp) { return monomial(Integer(1), 0, texp); }

  const std::map<Key, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(unsigned qexp, unsigned texp) const;
  /// Largest t exponent; -1 for zero.
  long t_degree() const;

  void add_monomial(const Integer& c, unsigned qexp, unsigned texp);

  QTPoly& operator+=(const QTPoly& rhs);
  QTPoly& operator-=(const QTPoly& rhs);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  QTPoly& operator*=(const QTPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

  /// Coefficient of t^k as a polynomial in q.
  QPoly t_coeff(unsigned k) const;
  QPoly at_t_one() const;
  QPoly at_t_equals_q() const;

 private:
  std::map<Key, Integer> terms_;
};

/// Exact division by a polynomial in q alone, coefficientwise in t.
QTPoly exact_div(const QTPoly& a, const QPoly& b);

}  // namespace qtab
