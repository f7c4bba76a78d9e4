#pragma once

#include "qtab/qtpoly.hpp"

namespace qtab {

/// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
QPoly qnum(unsigned k);
/// [n]_q! = [1][2]...[n].
QPoly qfact(unsigned n);
/// Gaussian binomial; zero when k > n.
QPoly qbinom(unsigned n, unsigned k);
/// [k]_{q,t} = t^(k-1) + q t^(k-2) + ... + q^(k-1).
QTPoly qt_num(unsigned k);
/// MacMahon's q-Catalan number qbinom(2b, b) / [b+1].
QPoly q_catalan(unsigned b);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
Integer catalan(unsigned n);
/// (1/m) C(m, j) C(m, j-1).
Integer narayana(unsigned m, unsigned j);

}  // namespace qtab
