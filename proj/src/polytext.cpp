#include "qtab/polytext.hpp"

#include <cctype>
#include <sstream>

#include "qtab/errors.hpp"

namespace qtab {
namespace {

void append_term(std::ostringstream& out, bool first, Integer c, const std::string& mono) {
  if (first) {
    if (c < 0) {
      out << "-";
      c = -c;
    }
  } else {
    out << (c < 0 ? " - " : " + ");
    if (c < 0) c = -c;
  }
  if (mono.empty())
    out << c;
  else if (c == 1)
    out << mono;
  else
    out << c << mono;
}

std::string power(std::string_view var, unsigned e) {
  if (e == 0) return "";
  std::string s(var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(const QPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    append_term(out, first, c[i], power(var, static_cast<unsigned>(i)));
    first = false;
  }
  return out.str();
}

std::string to_string(const QTPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  long td = p.t_degree();
  for (long k = 0; k <= td; ++k) {
    for (const auto& [key, c] : p.terms()) {
      if (key.second != static_cast<unsigned>(k)) continue;
      std::string mono = power("q", key.first);
      std::string tp = power("t", key.second);
      if (!tp.empty()) mono = mono.empty() ? tp : mono + "*" + tp;
      append_term(out, first, c, mono);
      first = false;
    }
  }
  return out.str();
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

std::string coeff_vector(const QPoly& p) {
  std::string s = "[";
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].get_str();
  }
  return s + "]";
}

QPoly parse_qpoly(std::string_view text, char var) {
  QPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw ParseError(std::string("polynomial '") + std::string(text) + "': " + what);
  };
  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer coeff = 1;
    bool have_digits = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = Integer(std::string(text.substr(start, i - start)));
      have_digits = true;
    }
    skip();
    if (have_digits && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i == text.size() || text[i] != var) fail("expected variable after '*'");
    }
    std::size_t exponent = 0;
    if (i < text.size() && text[i] == var) {
      ++i;
      exponent = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("missing exponent");
        exponent = std::stoul(std::string(text.substr(start, i - start)));
      }
    } else if (!have_digits) {
      fail("expected a term");
    }
    out.add_monomial(coeff * sign, exponent);
  }
  return out;
}

}  // namespace qtab
