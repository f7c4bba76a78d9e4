#include "qtab/qnumbers.hpp"

namespace qtab {

QPoly qnum(unsigned k) {
  return QPoly(std::vector<Integer>(k, Integer(1)));
}

QPoly qfact(unsigned n) {
  QPoly r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= qnum(i);
  return r;
}

QPoly qbinom(unsigned n, unsigned k) {
  if (k > n) return {};
  if (k > n - k) k = n - k;
  // Multiplicative form keeps intermediate degrees small.
  QPoly num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= qnum(n - i);
    den *= qnum(i + 1);
  }
  return exact_div(num, den);
}

QTPoly qt_num(unsigned k) {
  QTPoly r;
  for (unsigned i = 0; i < k; ++i) r.add_monomial(Integer(1), i, k - 1 - i);
  return r;
}

QPoly q_catalan(unsigned b) { return exact_div(qbinom(2 * b, b), qnum(b + 1)); }

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

Integer narayana(unsigned m, unsigned j) {
  if (m == 0 || j == 0 || j > m) return 0;
  return binomial(m, j) * binomial(m, j - 1) / m;
}

}  // namespace qtab
