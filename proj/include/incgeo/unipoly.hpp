#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "incgeo/multipoly.hpp"

namespace incgeo {

// Dense univariate polynomial over Rational, ascending coefficients.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline UniPoly uni_derivative(const UniPoly& p) {
  UniPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  uni_trim(d);
  return d;
}

inline UniPoly uni_neg_rem(const UniPoly& a, const UniPoly& b) {
  // remainder of a mod b, negated (Sturm step)
  UniPoly r = a;
  uni_trim(r);
  while (!r.empty() && uni_degree(r) >= uni_degree(b)) {
    Rational q = r.back() / b.back();
    int shift = uni_degree(r) - uni_degree(b);
    for (size_t i = 0; i < b.size(); ++i) r[static_cast<size_t>(shift) + i] -= q * b[i];
    uni_trim(r);
  }
  for (auto& c : r) c = -c;
  return r;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_neg_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline UniPoly uni_square_free(const UniPoly& p) {
  if (uni_is_zero(p)) return p;
  UniPoly d = uni_derivative(p);
  if (uni_is_zero(d)) return {Rational(1)};
  UniPoly g = uni_gcd(p, d);
  if (uni_degree(g) == 0) return p;
  // exact division p / g
  UniPoly r = p, q(p.size() - g.size() + 1, Rational(0));
  uni_trim(r);
  while (!r.empty() && uni_degree(r) >= uni_degree(g)) {
    Rational c = r.back() / g.back();
    int shift = uni_degree(r) - uni_degree(g);
    q[static_cast<size_t>(shift)] = c;
    for (size_t i = 0; i < g.size(); ++i) r[static_cast<size_t>(shift) + i] -= c * g[i];
    uni_trim(r);
  }
  return q;
}

// Number of distinct real roots, by Sturm's theorem (sign variations at
// -inf minus at +inf of the Sturm chain of the square-free part).
inline int count_distinct_real_roots(const UniPoly& p_in) {
  UniPoly p = uni_square_free(p_in);
  uni_trim(p);
  if (p.empty()) throw std::invalid_argument("count_distinct_real_roots: zero polynomial");
  if (uni_degree(p) == 0) return 0;
  std::vector<UniPoly> chain{p, uni_derivative(p)};
  while (!chain.back().empty() && uni_degree(chain.back()) > 0) {
    UniPoly r = uni_neg_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool at_plus_inf) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
      if (q.empty()) continue;
      int s = sgn(q.back());
      if (!at_plus_inf && uni_degree(q) % 2 != 0) s = -s;
      if (prev != 0 && s != 0 && s != prev) ++count;
      if (s != 0) prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

// All rational roots, exactly, via integer scaling and the rational root
// theorem. Intended for small constructed polynomials.
inline std::vector<Rational> rational_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  uni_trim(p);
  if (p.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (uni_degree(p) == 0) return roots;

  Integer denom_lcm(1);
  for (const auto& c : p) {
    Integer d = c.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
    denom_lcm = denom_lcm / g * d;
  }
  std::vector<Integer> ic;
  for (const auto& c : p) {
    Rational scaled = c * Rational(denom_lcm);
    ic.push_back(scaled.get_num());  // den is 1 after scaling by the lcm
  }

  auto divisors = [](Integer n) {
    std::vector<Integer> out;
    n = abs(n);
    Integer i(1);
    for (; i * i <= n; ++i) {
      if (n % i == 0) {
        out.push_back(i);
        if (i * i != n) out.push_back(n / i);
      }
    }
    return out;
  };
  std::vector<Integer> ps = divisors(ic.front());
  std::vector<Integer> qs = divisors(ic.back());
  for (const Integer& pn : ps)
    for (const Integer& qd : qs)
      for (int s : {1, -1}) {
        Rational cand(s * pn, qd);
        cand.canonicalize();
        if (sgn(uni_eval(p, cand)) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Extract the dense coefficient vector of a polynomial that is univariate
// in `v` (all other exponents zero).
inline UniPoly to_unipoly(const MultiPoly& f, Var v) {
  UniPoly out(static_cast<size_t>(std::max(f.degree_in(v), 0)) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < kNumVars; ++i)
      if (static_cast<Var>(i) != v && mono_exp(m, i) > 0)
        throw std::invalid_argument("to_unipoly: polynomial is not univariate in " + var_name(v));
    out[mono_exp(m, v)] = c;
  }
  uni_trim(out);
  return out;
}

}  // namespace incgeo
