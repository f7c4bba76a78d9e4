#include "qtab/qtpoly.hpp"

namespace qtab {

QTPoly::QTPoly(long constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

QTPoly::QTPoly(const QPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms_[{static_cast<unsigned>(i), 0}] = c[i];
}

QTPoly QTPoly::monomial(const Integer& c, unsigned qexp, unsigned texp) {
  QTPoly r;
  r.add_monomial(c, qexp, texp);
  return r;
}

Integer QTPoly::coeff(unsigned qexp, unsigned texp) const {
  auto it = terms_.find({qexp, texp});
  return it == terms_.end() ? Integer(0) : it->second;
}

long QTPoly::t_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms_) d = std::max<long>(d, k.second);
  return d;
}

void QTPoly::add_monomial(const Integer& c, unsigned qexp, unsigned texp) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({qexp, texp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_monomial(c, k.first, k.second);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_monomial(-c, k.first, k.second);
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_monomial(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

QPoly QTPoly::t_coeff(unsigned k) const {
  QPoly r;
  for (const auto& [key, c] : terms_)
    if (key.second == k) r.add_monomial(c, key.first);
  return r;
}

QPoly QTPoly::at_t_one() const {
  QPoly r;
  for (const auto& [key, c] : terms_) r.add_monomial(c, key.first);
  return r;
}

QPoly QTPoly::at_t_equals_q() const {
  QPoly r;
  for (const auto& [key, c] : terms_) r.add_monomial(c, key.first + key.second);
  return r;
}

QTPoly exact_div(const QTPoly& a, const QPoly& b) {
  QTPoly r;
  long td = a.t_degree();
  for (long k = 0; k <= td; ++k) {
    QPoly quotient = exact_div(a.t_coeff(static_cast<unsigned>(k)), b);
    const auto& c = quotient.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      r.add_monomial(c[i], static_cast<unsigned>(i), static_cast<unsigned>(k));
  }
  return r;
}

}  // namespace qtab
