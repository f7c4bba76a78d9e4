#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace qtab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i. The coefficient
/// vector never ends in a zero, so the zero polynomial is the empty vector
/// and equal polynomials compare equal element-wise.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const Integer& constant);
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly monomial(const Integer& coeff, std::size_t exponent);
  static QPoly q_power(std::size_t exponent) { return monomial(Integer(1), exponent); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  long low_degree() const;
  Integer coeff(std::size_t exponent) const;
  const Integer& leading() const { return coeffs_.back(); }

  /// Adds c*q^e in place; the hot path of every generating-function fold.
  void add_monomial(const Integer& c, std::size_t e);
  void add_monomial(long c, std::size_t e) { add_monomial(Integer(c), e); }

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Integer& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Integer& c) { return a *= c; }
  friend QPoly operator*(const Integer& c, QPoly a) { return a *= c; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  QPoly primitive_part() const;

  /// f(q) -> f(q^r).
  QPoly substitute_power(unsigned r) const;
  /// q^d * f(1/q); requires d >= degree().
  QPoly reversed(std::size_t d) const;
  /// Drops every term of degree > cap.
  QPoly truncated(std::size_t cap) const;

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  bool has_nonnegative_coeffs() const;
  bool is_palindromic() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

QPoly pow(QPoly base, unsigned exponent);

/// Exact quotient a / b over Z[q]; throws InexactDivision when b does not
/// divide a, DivisionByZero when b is zero.
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Division with remainder over Z[q]. Returns false if some step would need a
/// non-integral quotient coefficient.
bool try_divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);

/// lc(b)^(deg a - deg b + 1) * a mod b.
QPoly pseudo_remainder(const QPoly& a, const QPoly& b);

/// Greatest common divisor in Z[q] by the subresultant PRS. The result has
/// positive leading coefficient; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

/// (1 - q)(1 - q^2)...(1 - q^n).
QPoly one_minus_q_powers(std::size_t n);

/// Truncated power-series inverse of f (requires f(0) = +-1), modulo q^(cap+1).
QPoly series_inverse(const QPoly& f, std::size_t cap);

}  // namespace qtab
