#include "qtab/qpoly.hpp"

#include <algorithm>

#include "qtab/errors.hpp"

namespace qtab {

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Integer& coeff, std::size_t exponent) {
  QPoly p;
  p.add_monomial(coeff, exponent);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long QPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<long>(i);
  return -1;
}

Integer QPoly::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Integer(0);
}

void QPoly::add_monomial(const Integer& c, std::size_t e) {
  if (c == 0) return;
  if (e >= coeffs_.size()) coeffs_.resize(e + 1);
  coeffs_[e] += c;
  if (e + 1 == coeffs_.size()) trim();
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Integer QPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  QPoly r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

QPoly QPoly::substitute_power(unsigned r) const {
  if (r == 0) return QPoly(eval(Integer(1)));
  QPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add_monomial(coeffs_[i], i * r);
  return out;
}

QPoly QPoly::reversed(std::size_t d) const {
  if (degree() > static_cast<long>(d)) throw DimensionMismatch("reversed: degree exceeds d");
  QPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.add_monomial(coeffs_[i], d - i);
  return out;
}

QPoly QPoly::truncated(std::size_t cap) const {
  if (coeffs_.size() <= cap + 1) return *this;
  return QPoly(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(cap) + 1));
}

Integer QPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
    acc.canonicalize();
  }
  return acc;
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

bool QPoly::is_palindromic() const {
  long lo = low_degree();
  if (lo < 0) return true;
  std::size_t a = static_cast<std::size_t>(lo), b = coeffs_.size() - 1;
  while (a < b) {
    if (coeffs_[a] != coeffs_[b]) return false;
    ++a;
    --b;
  }
  return true;
}

QPoly pow(QPoly base, unsigned exponent) {
  QPoly result = 1;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

bool try_divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> qc(r.size() >= bc.size() ? r.size() - db : 0);
  Integer t;
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), bc[db].get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), bc[db].get_mpz_t());
    qc[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= t * bc[j];
  }
  quotient = QPoly(std::move(qc));
  remainder = QPoly(std::move(r));
  return true;
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  QPoly quotient, remainder;
  if (!try_divmod(a, b, quotient, remainder) || !remainder.is_zero())
    throw InexactDivision("polynomial division is not exact");
  return quotient;
}

QPoly pseudo_remainder(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = bc[db];
  for (std::size_t k = r.size(); k-- > db;) {
    Integer lead = r[k];
    for (auto& x : r) x *= lb;
    if (lead != 0)
      for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= lead * bc[j];
  }
  return QPoly(std::move(r));
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
  if (a0.is_zero()) return b0.primitive_part() * b0.content();
  if (b0.is_zero()) return a0.primitive_part() * a0.content();
  QPoly a = a0, b = b0;
  if (a.degree() < b.degree()) std::swap(a, b);
  Integer content_gcd;
  {
    Integer ca = a.content(), cb = b.content();
    mpz_gcd(content_gcd.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  }
  a = a.primitive_part();
  b = b.primitive_part();
  Integer g = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    QPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = 1;
      break;
    }
    a = b;
    Integer divisor = g;
    for (long i = 0; i < delta; ++i) divisor *= h;
    std::vector<Integer> rc = r.coeffs();
    for (auto& x : rc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = QPoly(std::move(rc));
    g = a.leading();
    if (delta != 0) {
      Integer num = 1;
      for (long i = 0; i < delta; ++i) num *= g;
      Integer den = 1;
      for (long i = 0; i < delta - 1; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return b.primitive_part() * content_gcd;
}

QPoly one_minus_q_powers(std::size_t n) {
  QPoly r = 1;
  for (std::size_t k = 1; k <= n; ++k) r *= (QPoly(1) - QPoly::q_power(k));
  return r;
}

QPoly series_inverse(const QPoly& f, std::size_t cap) {
  const Integer f0 = f.coeff(0);
  if (f0 != 1 && f0 != -1) throw InexactDivision("series_inverse needs constant term +-1");
  std::vector<Integer> g(cap + 1);
  for (std::size_t k = 0; k <= cap; ++k) {
    Integer acc = (k == 0) ? Integer(1) : Integer(0);
    for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(std::max(0L, f.degree())); ++j)
      acc -= f.coeff(j) * g[k - j];
    g[k] = acc * f0;  // f0 is its own inverse
  }
  return QPoly(std::move(g));
}

}  // namespace qtab
