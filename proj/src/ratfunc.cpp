#include "qtab/ratfunc.hpp"

#include "qtab/errors.hpp"

namespace qtab {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_).primitive_part();
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Integer cn = num_.content(), cd = den_.content(), c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = exact_div(num_, QPoly(c));
    den_ = exact_div(den_, QPoly(c));
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by the zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw DivisionByZero("denominator vanishes at evaluation point");
  Rational r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

}  // namespace qtab
