#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "incgeo/rational.hpp"

namespace incgeo {

// Global variable universe with the fixed order
//   x < y < z < w < v1 < v2 < v3 < v4 < t.
// x..w are point coordinates, v1..v4 direction coordinates, t a curve/line
// parameter. Every polynomial's exponent vector lives in this universe; the
// declared variable list of a MultiPoly is a subset of it.
enum class Var : int { x = 0, y, z, w, v1, v2, v3, v4, t };

inline constexpr int kNumVars = 9;
inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "x", "y", "z", "w", "v1", "v2", "v3", "v4", "t"};

inline std::string var_name(Var v) { return std::string(kVarNames[static_cast<int>(v)]); }

inline std::optional<Var> var_from_name(std::string_view s) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == s) return static_cast<Var>(i);
  return std::nullopt;
}

// Monomial key packed into 64 bits: [total degree:10][x:6][y:6]...[t:6],
// x in the most significant variable field. Raw uint64 ascending order is
// exactly graded-lex ascending. Per-variable degree cap 63.
using Monomial = std::uint64_t;

inline constexpr unsigned kExpBits = 6;
inline constexpr unsigned kExpMask = (1u << kExpBits) - 1;  // 63

inline unsigned mono_exp(Monomial m, int var_index) {
  return static_cast<unsigned>((m >> ((kNumVars - 1 - var_index) * kExpBits)) & kExpMask);
}
inline unsigned mono_exp(Monomial m, Var v) { return mono_exp(m, static_cast<int>(v)); }
inline unsigned mono_degree(Monomial m) { return static_cast<unsigned>(m >> (kNumVars * kExpBits)); }

inline Monomial mono_make(const std::array<unsigned, kNumVars>& exps) {
  Monomial m = 0;
  unsigned total = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] > kExpMask) throw std::overflow_error("monomial exponent exceeds 63");
    m |= static_cast<Monomial>(exps[i]) << ((kNumVars - 1 - i) * kExpBits);
    total += exps[i];
  }
  if (total > 1023) throw std::overflow_error("monomial total degree exceeds 1023");
  m |= static_cast<Monomial>(total) << (kNumVars * kExpBits);
  return m;
}

inline Monomial mono_one() { return 0; }

inline Monomial mono_var(Var v, unsigned e = 1) {
  std::array<unsigned, kNumVars> a{};
  a[static_cast<int>(v)] = e;
  return mono_make(a);
}

inline Monomial mono_mul(Monomial a, Monomial b) {
  for (int i = 0; i < kNumVars; ++i)
    if (mono_exp(a, i) + mono_exp(b, i) > kExpMask)
      throw std::overflow_error("monomial product exponent exceeds 63");
  return a + b;  // fields are disjoint and carries were excluded above
}

inline bool mono_divides(Monomial a, Monomial b) {  // a | b
  for (int i = 0; i < kNumVars; ++i)
    if (mono_exp(a, i) > mono_exp(b, i)) return false;
  return true;
}

inline Monomial mono_div(Monomial b, Monomial a) {  // b / a, assumes a | b
  return b - a;
}

// Sparse multivariate polynomial over Rational with graded-lex term order.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;  // ascending grlex

  MultiPoly() = default;

  static MultiPoly zero(std::vector<Var> vars = {}) {
    MultiPoly p;
    p.vars_ = normalize_vars(std::move(vars));
    return p;
  }
  static MultiPoly constant(const Rational& c, std::vector<Var> vars = {}) {
    MultiPoly p = zero(std::move(vars));
    if (sgn(c) != 0) p.terms_[mono_one()] = c;
    return p;
  }
  static MultiPoly one() { return constant(Rational(1)); }
  static MultiPoly variable(Var v, unsigned e = 1) {
    MultiPoly p;
    p.vars_ = {v};
    p.terms_[mono_var(v, e)] = Rational(1);
    return p;
  }

  const std::vector<Var>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
  }
  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
  }

  int degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(mono_degree(terms_.rbegin()->first));
  }
  int degree_in(Var v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono_exp(m, v)));
    return d;
  }

  Monomial leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
  }
  const Rational& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coeff of zero polynomial");
    return terms_.rbegin()->second;
  }

  // Canonical "up to scalar" form: leading grlex coefficient 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return *this / leading_coeff();
  }

  void add_term(Monomial m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
    absorb_support(m);
  }

  // Declared-variable handling -----------------------------------------

  // Re-declare the variable list (must cover the support).
  MultiPoly with_vars(std::vector<Var> vars) const {
    MultiPoly p = *this;
    p.vars_ = normalize_vars(std::move(vars));
    for (const auto& [m, c] : p.terms_)
      for (int i = 0; i < kNumVars; ++i)
        if (mono_exp(m, i) > 0 && !p.declares(static_cast<Var>(i)))
          throw std::invalid_argument("with_vars: declared list does not cover support");
    return p;
  }

  bool declares(Var v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
  }

  std::vector<Var> support() const {
    std::array<bool, kNumVars> used{};
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < kNumVars; ++i)
        if (mono_exp(m, i) > 0) used[i] = true;
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
      if (used[i]) out.push_back(static_cast<Var>(i));
    return out;
  }

  // Arithmetic ----------------------------------------------------------

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r.vars_ = merge_vars(a.vars_, b.vars_);
    for (const auto& [m, c] : b.terms_) r.add_raw(m, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r.vars_ = merge_vars(a.vars_, b.vars_);
    for (const auto& [m, c] : b.terms_) r.add_raw(m, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.vars_ = merge_vars(a.vars_, b.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    // accumulate into the map; term counts stay desk-scale
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_raw(mono_mul(ma, mb), ca * cb);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly r;
    r.vars_ = a.vars_;
    if (sgn(c) == 0) return r;
    r.terms_ = a.terms_;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
  }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
  friend MultiPoly operator/(const MultiPoly& a, const Rational& c) {
    if (sgn(c) == 0) throw std::invalid_argument("division by zero scalar");
    MultiPoly r = a;
    for (auto& [m, cc] : r.terms_) cc /= c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = MultiPoly::one().with_vars(vars_);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;  // declared lists are metadata, values decide equality
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Evaluation / substitution -------------------------------------------

  // point aligns with the declared variable list.
  Rational eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
      throw std::invalid_argument("eval: arity mismatch (|point| != |variables|)");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (size_t i = 0; i < vars_.size(); ++i) {
        unsigned e = mono_exp(m, vars_[i]);
        for (unsigned k = 0; k < e; ++k) term *= point[i];
      }
      acc += term;
    }
    return acc;
  }

  MultiPoly partial_derivative(Var v) const {
    if (!declares(v)) throw std::invalid_argument("partial_derivative: unknown variable " + var_name(v));
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
      unsigned e = mono_exp(m, v);
      if (e == 0) continue;
      r.add_raw(mono_div(m, mono_var(v)), c * Rational(static_cast<long>(e)));
    }
    return r;
  }

  // Substitute each variable in `subs` by a polynomial; variables not listed
  // stay themselves.
  MultiPoly substitute(const std::map<Var, MultiPoly>& subs) const {
    MultiPoly r;
    std::vector<Var> rvars = vars_;
    for (const auto& [v, g] : subs) rvars = merge_vars(rvars, g.vars());
    r.vars_ = rvars;
    for (const auto& [m, c] : terms_) {
      MultiPoly term = MultiPoly::constant(c);
      for (int i = 0; i < kNumVars; ++i) {
        unsigned e = mono_exp(m, i);
        if (e == 0) continue;
        Var v = static_cast<Var>(i);
        auto it = subs.find(v);
        if (it == subs.end())
          term = term * MultiPoly::variable(v, e);
        else
          term = term * it->second.pow(e);
      }
      r += term;
    }
    r.vars_ = merge_vars(r.vars_, rvars);
    return r;
  }

  MultiPoly substitute_var(Var v, const MultiPoly& g) const { return substitute({{v, g}}); }

  // Coefficients of the polynomial viewed univariately in `v`, ascending.
  std::vector<MultiPoly> coefficients_in(Var v) const {
    int d = degree_in(v);
    std::vector<MultiPoly> out(static_cast<size_t>(d) + 1);
    std::vector<Var> cv;
    for (Var u : vars_)
      if (u != v) cv.push_back(u);
    for (auto& p : out) p = MultiPoly::zero(cv);
    for (const auto& [m, c] : terms_) {
      unsigned e = mono_exp(m, v);
      out[e].add_raw(mono_div(m, mono_var(v, e)), c);
    }
    return out;
  }

  static MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, Var v) {
    MultiPoly r;
    for (size_t e = 0; e < coeffs.size(); ++e) {
      r += coeffs[e] * MultiPoly::variable(v, static_cast<unsigned>(e));
    }
    return r;
  }

 private:
  void add_raw(Monomial m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.emplace(m, c);
    else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void absorb_support(Monomial m) {
    for (int i = 0; i < kNumVars; ++i)
      if (mono_exp(m, i) > 0 && !declares(static_cast<Var>(i))) {
        vars_.push_back(static_cast<Var>(i));
        std::sort(vars_.begin(), vars_.end());
      }
  }

  static std::vector<Var> normalize_vars(std::vector<Var> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  static std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
    std::vector<Var> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return normalize_vars(std::move(out));
  }

  std::vector<Var> vars_;  // declared variables, ascending in the global order
  TermMap terms_;          // no stored zero coefficients
};

// --- polycore operations ----------------------------------------------

// Homogeneous components f_0, f_1, ..., f_deg of f(p + x) in the shift
// variables; the first nonzero index is the multiplicity of p when f(p)=0.
inline std::vector<MultiPoly> taylor_components(const MultiPoly& f,
                                                const std::vector<Rational>& p) {
  const auto& vars = f.vars();
  if (p.size() != vars.size())
    throw std::invalid_argument("taylor_components: arity mismatch");
  std::map<Var, MultiPoly> shift;
  for (size_t i = 0; i < vars.size(); ++i)
    shift.emplace(vars[i], MultiPoly::constant(p[i]) + MultiPoly::variable(vars[i]));
  MultiPoly shifted = f.substitute(shift);
  int d = std::max(f.degree(), 0);
  std::vector<MultiPoly> comps(static_cast<size_t>(d) + 1, MultiPoly::zero(vars));
  for (const auto& [m, c] : shifted.terms()) comps[mono_degree(m)].add_term(m, c);
  return comps;
}

// The polynomial \nabla_v^k f as a MultiPoly in the point variables plus
// direction variables v1..vd; equals k! times the t^k coefficient of f(p+tv).
inline MultiPoly directional_derivative_form(const MultiPoly& f, int k) {
  if (k < 1) throw std::invalid_argument("directional_derivative_form: k out of range");
  const auto& vars = f.vars();
  for (Var v : vars)
    if (v != Var::x && v != Var::y && v != Var::z && v != Var::w)
      throw std::invalid_argument("directional_derivative_form: f must be in point variables");
  const int d = static_cast<int>(vars.size());
  static const Var dir_vars[4] = {Var::v1, Var::v2, Var::v3, Var::v4};

  MultiPoly result;
  // iterate over all compositions alpha of k into d parts
  std::vector<unsigned> alpha(static_cast<size_t>(d), 0);
  auto factorial = [](int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
  };
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == d - 1) {
      alpha[pos] = static_cast<unsigned>(rem);
      MultiPoly daf = f;
      Rational coef = factorial(k);
      for (int i = 0; i < d; ++i) {
        for (unsigned j = 0; j < alpha[i]; ++j) daf = daf.partial_derivative(vars[i]);
        coef /= factorial(static_cast<int>(alpha[i]));
      }
      if (!daf.is_zero()) {
        MultiPoly vmono = MultiPoly::one();
        for (int i = 0; i < d; ++i)
          if (alpha[i] > 0) vmono = vmono * MultiPoly::variable(dir_vars[i], alpha[i]);
        result += daf * vmono * coef;
      }
      return;
    }
    for (int a = 0; a <= rem; ++a) {
      alpha[pos] = static_cast<unsigned>(a);
      rec(pos + 1, rem - a);
    }
  };
  rec(0, k);
  return result;
}

// Restriction of f to the parametric line base + t*dir (over the first
// |base| point variables); result is univariate in t.
inline MultiPoly restrict_to_line(const MultiPoly& f, const std::vector<Rational>& base,
                                  const std::vector<Rational>& dir) {
  const auto& vars = f.vars();
  if (base.size() != vars.size() || dir.size() != vars.size())
    throw std::invalid_argument("restrict_to_line: dimension mismatch");
  std::map<Var, MultiPoly> subs;
  for (size_t i = 0; i < vars.size(); ++i)
    subs.emplace(vars[i], MultiPoly::constant(base[i]) +
                              MultiPoly::constant(dir[i]) * MultiPoly::variable(Var::t));
  return f.substitute(subs);
}

}  // namespace incgeo
