#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "incgeo/multipoly.hpp"

namespace incgeo {

// Sparse multivariate exact division of g by f (coefficients are rational,
// so no content handling is needed). Returns the quotient iff f | g exactly.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& g, const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  MultiPoly q = MultiPoly::zero(f.vars());
  MultiPoly r = g;
  const Monomial lf = f.leading_monomial();
  const Rational& cf = f.leading_coeff();
  while (!r.is_zero()) {
    Monomial lr = r.leading_monomial();
    if (!mono_divides(lf, lr)) return std::nullopt;
    Monomial mq = mono_div(lr, lf);
    Rational cq = r.leading_coeff() / cf;
    MultiPoly term;
    term.add_term(mq, cq);
    q += term;
    r -= term * f;
  }
  return q;
}

// true iff g = f*h exactly for some polynomial h (zero g divides by anything).
inline bool divides(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("divides: zero divisor");
  if (g.is_zero()) return true;
  return exact_divide(g, f).has_value();
}

namespace detail {

inline Var main_variable(const MultiPoly& a, const MultiPoly& b) {
  // highest variable (in the global order) occurring in either
  for (int i = kNumVars - 1; i >= 0; --i) {
    Var v = static_cast<Var>(i);
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  throw std::logic_error("main_variable: both arguments constant");
}

inline MultiPoly lc_in(const MultiPoly& f, Var v) {
  auto cs = f.coefficients_in(v);
  return cs.back();
}

// Pseudo-remainder of a by b with respect to v: lc_v(b)^(da-db+1) * a mod b.
inline MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, Var v) {
  int db = b.degree_in(v);
  MultiPoly lb = lc_in(b, v);
  MultiPoly r = a;
  int e = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    MultiPoly lr = lc_in(r, v);
    MultiPoly shift = MultiPoly::variable(v, static_cast<unsigned>(dr - db));
    r = lb * r - lr * shift * b;
    --e;
  }
  MultiPoly result = r;
  for (int i = 0; i < e; ++i) result = result * lb;
  return result;
}

}  // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly poly_gcd_many(const std::vector<MultiPoly>& ps) {
  MultiPoly g = MultiPoly::zero();
  for (const auto& p : ps) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return MultiPoly::one();
  }
  return g;
}

namespace detail {

inline MultiPoly content_in(const MultiPoly& f, Var v) {
  return poly_gcd_many(f.coefficients_in(v));
}

inline MultiPoly primitive_part_in(const MultiPoly& f, Var v) {
  MultiPoly c = content_in(f, v);
  auto q = exact_divide(f, c);
  if (!q) throw std::logic_error("primitive_part_in: content does not divide");
  return *q;
}

}  // namespace detail

// GCD by subresultant polynomial remainder sequence with content/primitive
// recursion over the variable order; result normalized monic under grlex.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly::one();

  Var v = detail::main_variable(a, b);
  if (a.degree_in(v) == 0) return poly_gcd(detail::content_in(b, v), a).monic();
  if (b.degree_in(v) == 0) return poly_gcd(detail::content_in(a, v), b).monic();

  MultiPoly ca = detail::content_in(a, v);
  MultiPoly cb = detail::content_in(b, v);
  MultiPoly c = poly_gcd(ca, cb);
  MultiPoly A = *exact_divide(a, ca);
  MultiPoly B = *exact_divide(b, cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

  MultiPoly g = MultiPoly::one();
  MultiPoly h = MultiPoly::one();
  while (true) {
    int delta = A.degree_in(v) - B.degree_in(v);
    MultiPoly R = detail::pseudo_rem(A, B, v);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) return c.monic();
    A = B;
    MultiPoly denom = g;
    for (int i = 0; i < delta; ++i) denom = denom * h;
    auto nb = exact_divide(R, denom);
    if (!nb) throw std::logic_error("subresultant PRS: inexact division");
    B = *nb;
    g = detail::lc_in(A, v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      MultiPoly num = g;
      for (int i = 1; i < delta; ++i) num = num * g;
      MultiPoly den = h;
      for (int i = 2; i < delta; ++i) den = den * h;
      auto nh = exact_divide(num, den);
      if (!nh) throw std::logic_error("subresultant PRS: inexact h update");
      h = *nh;
    }
  }
  return (c * detail::primitive_part_in(B, v)).monic();
}

// Product of the distinct irreducible factors of f, up to a scalar:
// f / gcd(f, df/dv) iterated over the variables with nonzero derivative.
inline MultiPoly square_free_part(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
  if (f.is_constant()) return MultiPoly::one();
  MultiPoly d = f;
  for (Var v : f.support()) {
    MultiPoly pd = f.partial_derivative(v);
    if (pd.is_zero()) continue;
    d = poly_gcd(d, pd);
    if (d.is_constant()) break;
  }
  if (d.is_constant()) return f.monic();
  auto q = exact_divide(f, d);
  if (!q) throw std::logic_error("square_free_part: gcd does not divide f");
  return q->monic();
}

inline bool is_square_free(const MultiPoly& f) {
  if (f.is_zero()) return false;
  if (f.is_constant()) return true;
  return square_free_part(f).degree() == f.degree();
}

}  // namespace incgeo
