#pragma once

#include <string>
#include <string_view>

#include "qtab/qtpoly.hpp"
#include "qtab/ratfunc.hpp"

namespace qtab {

/// "1 + 2q + q^2", ascending exponents; "0" for zero.
std::string to_string(const QPoly& p, std::string_view var = "q");
/// Terms ordered by t exponent then q exponent, e.g. "t + q".
std::string to_string(const QTPoly& p);
/// "(num) / (den)", or just the numerator when den = 1.
std::string to_string(const RatFunc& f);
/// "[1,2,1]"
std::string coeff_vector(const QPoly& p);

/// Inverse of to_string(QPoly); also accepts "2*q".
QPoly parse_qpoly(std::string_view text, char var = 'q');

}  // namespace qtab
