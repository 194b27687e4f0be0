#pragma once

#include <stdexcept>
#include <string>

#include "incgeo/rational.hpp"

namespace incgeo {

// Closed rational interval bracketing a nonnegative real value; the exact
// substrate for evaluating bound expressions with fractional exponents.
struct QInterval {
  Rational lo, hi;

  static QInterval exact(const Rational& v) { return {v, v}; }
  bool is_point() const { return lo == hi; }

  friend QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  // nonnegative operands only
  friend QInterval operator*(const QInterval& a, const QInterval& b) {
    if (sgn(a.lo) < 0 || sgn(b.lo) < 0) throw std::invalid_argument("QInterval: negative operand");
    return {a.lo * b.lo, a.hi * b.hi};
  }
  friend QInterval operator*(const QInterval& a, const Rational& c) {
    if (sgn(c) < 0) throw std::invalid_argument("QInterval: negative scalar");
    return {a.lo * c, a.hi * c};
  }
};

// Bracket of N^(1/k) for integer N >= 0 to `digits` decimal places; exact
// roots collapse to a point interval.
inline QInterval kth_root_bracket(const Integer& n, unsigned k, unsigned digits) {
  if (sgn(n) < 0) throw std::invalid_argument("kth_root_bracket: negative radicand");
  if (k == 0) throw std::invalid_argument("kth_root_bracket: zeroth root");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled;
  mpz_pow_ui(scaled.get_mpz_t(), scale.get_mpz_t(), k);
  scaled *= n;
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), k);
  Rational lo(r, scale);
  lo.canonicalize();
  if (exact) return {lo, lo};
  Rational hi(r + 1, scale);
  hi.canonicalize();
  return {lo, hi};
}

// Bracket of (a)^(1/k) for rational a >= 0: (num*den^(k-1))^(1/k) / den.
inline QInterval kth_root_bracket(const Rational& a, unsigned k, unsigned digits) {
  if (sgn(a) < 0) throw std::invalid_argument("kth_root_bracket: negative radicand");
  Integer num = a.get_num(), den = a.get_den();
  Integer powden;
  mpz_pow_ui(powden.get_mpz_t(), den.get_mpz_t(), k - 1);
  QInterval root = kth_root_bracket(Integer(num * powden), k, digits);
  Rational d(den);
  return {root.lo / d, root.hi / d};
}

// Bracket of m^(p/q) for integer m >= 0 and nonnegative rational exponent.
inline QInterval rational_power_bracket(const Integer& m, const Rational& expnt,
                                        unsigned digits) {
  if (sgn(expnt) < 0) throw std::invalid_argument("rational_power_bracket: negative exponent");
  if (sgn(expnt) == 0) return QInterval::exact(Rational(1));
  unsigned long p = expnt.get_num().get_ui();
  unsigned long q = expnt.get_den().get_ui();
  Integer mp;
  mpz_pow_ui(mp.get_mpz_t(), m.get_mpz_t(), p);
  if (q == 1) return QInterval::exact(Rational(mp));
  return kth_root_bracket(mp, static_cast<unsigned>(q), digits);
}

// Bracket of log2(m) for integer m >= 1, with denominator `q`:
// log2(m) lies in [p/q, (p+1)/q] where 2^p <= m^q < 2^(p+1).
inline QInterval log2_bracket(const Integer& m, unsigned long q) {
  if (m < 1) throw std::invalid_argument("log2_bracket: m must be >= 1");
  Integer mq;
  mpz_pow_ui(mq.get_mpz_t(), m.get_mpz_t(), q);
  // bit length - 1 = floor(log2)
  size_t bits = mpz_sizeinbase(mq.get_mpz_t(), 2);
  unsigned long p = static_cast<unsigned long>(bits - 1);
  // exact power of two collapses
  Integer check;
  mpz_ui_pow_ui(check.get_mpz_t(), 2, p);
  Rational lo(static_cast<long>(p), static_cast<long>(q));
  lo.canonicalize();
  if (check == mq) return {lo, lo};
  Rational hi(static_cast<long>(p + 1), static_cast<long>(q));
  hi.canonicalize();
  return {lo, hi};
}

// Bracket of 2^e for a nonnegative rational exponent interval.
inline QInterval pow2_bracket(const QInterval& e, unsigned digits) {
  auto pow2_rational = [&](const Rational& r, bool round_up) -> Rational {
    unsigned long p = r.get_num().get_ui();
    unsigned long q = r.get_den().get_ui();
    Integer two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, p);
    if (q == 1) return Rational(two_p);
    QInterval b = kth_root_bracket(two_p, static_cast<unsigned>(q), digits);
    return round_up ? b.hi : b.lo;
  };
  return {pow2_rational(e.lo, false), pow2_rational(e.hi, true)};
}

// Fixed-precision decimal rendering (round toward zero), deterministic.
inline std::string decimal_string(const Rational& r, unsigned places) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  Rational scaled = r * Rational(scale);
  Integer whole = scaled.get_num() / scaled.get_den();
  bool neg = sgn(whole) < 0;
  Integer a = abs(whole);
  Integer ip = a / scale;
  Integer fp = a % scale;
  std::string frac = fp.get_str();
  while (frac.size() < places) frac = "0" + frac;
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (places > 0) out += "." + frac;
  return out;
}

}  // namespace incgeo
