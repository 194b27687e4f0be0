#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "incgeo/multipoly.hpp"

namespace incgeo {

// Canonical text form: explicit monomial sum in graded-lex descending term
// order, e.g. "-x*y + z" or "x^2 + y^2 + z^2 - 1"; rationals as "a/b".
// print/parse round-trip bit-exactly on canonical strings.
inline std::string to_text(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial m = it->first;
    const Rational& c = it->second;
    Rational ac = abs_rat(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool has_mono = m != mono_one();
    bool coeff_one = (ac == 1);
    if (!has_mono || !coeff_one) os << ac.get_str();
    bool star = !coeff_one && has_mono;
    for (int i = 0; i < kNumVars; ++i) {
      unsigned e = mono_exp(m, i);
      if (e == 0) continue;
      if (star) os << "*";
      os << kVarNames[i];
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

namespace detail {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;
  explicit PolyLexer(const std::string& str) : s(str) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("polynomial text: unexpected end");
    return s[pos++];
  }
  std::string take_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial text: expected digits at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
  std::string take_ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial text: expected identifier at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
};

}  // namespace detail

inline MultiPoly parse_poly(const std::string& text) {
  detail::PolyLexer lex(text);
  MultiPoly result;
  bool first_term = true;
  while (!lex.eof()) {
    int sign_flip = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.take();
      if (c == '-') sign_flip = -1;
    } else if (!first_term) {
      throw std::invalid_argument("polynomial text: expected '+' or '-' between terms");
    }
    first_term = false;

    Rational coeff(1);
    Monomial mono = mono_one();
    bool saw_factor = false;
    while (true) {
      char p = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        std::string num = lex.take_integer();
        std::string lit = num;
        if (lex.peek() == '/') {
          lex.take();
          lit += "/" + lex.take_integer();
        }
        coeff *= parse_rational(lit);
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p))) {
        std::string name = lex.take_ident();
        auto v = var_from_name(name);
        if (!v) throw std::invalid_argument("polynomial text: unknown variable '" + name + "'");
        unsigned e = 1;
        if (lex.peek() == '^') {
          lex.take();
          e = static_cast<unsigned>(std::stoul(lex.take_integer()));
        }
        mono = mono_mul(mono, mono_var(*v, e));
        saw_factor = true;
      } else {
        throw std::invalid_argument("polynomial text: expected number or variable");
      }
      if (lex.peek() == '*') {
        lex.take();
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("polynomial text: empty term");
    if (sign_flip < 0) coeff = -coeff;
    result.add_term(mono, coeff);
  }
  return result;
}

}  // namespace incgeo
