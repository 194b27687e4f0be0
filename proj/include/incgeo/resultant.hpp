#pragma once

#include <stdexcept>
#include <vector>

#include "incgeo/poly_gcd.hpp"

namespace incgeo {

// Determinant of a square matrix of polynomials by fraction-free Bareiss
// elimination; every division is exact by the Bareiss identity.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return MultiPoly::one();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: not square");
  int sign = 1;
  MultiPoly prev = MultiPoly::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t j = k + 1;
      while (j < n && m[j][k].is_zero()) ++j;
      if (j == n) return MultiPoly::zero();
      std::swap(m[k], m[j]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("bareiss_determinant: inexact division");
        m[i][j] = *q;
      }
      m[i][k] = MultiPoly::zero();
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Sylvester matrix of f, g with respect to var (both must have positive
// degree in var).
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f,
                                                            const MultiPoly& g, Var var) {
  int df = f.degree_in(var);
  int dg = g.degree_in(var);
  auto fc = f.coefficients_in(var);  // ascending
  auto gc = g.coefficients_in(var);
  size_t n = static_cast<size_t>(df + dg);
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly::zero()));
  for (int r = 0; r < dg; ++r)
    for (int j = 0; j <= df; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = fc[static_cast<size_t>(df - j)];
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) m[static_cast<size_t>(dg + r)][static_cast<size_t>(r + j)] = gc[static_cast<size_t>(dg - j)];
  return m;
}

// Res_var(f, g), computed exactly. Vanishes at a parameter point iff the
// specializations share a root in var there or both leading coefficients
// vanish. A linear argument is handled by the substitution identity
// Res(a*v+b, g) = a^deg(g) * g(-b/a), which equals the Sylvester determinant.
inline MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, Var var) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("sylvester_resultant: zero input");
  int df = f.degree_in(var);
  int dg = g.degree_in(var);
  if (df == 0 || dg == 0)
    throw std::invalid_argument("sylvester_resultant: degree 0 in " + var_name(var));

  if (df == 1 || dg == 1) {
    bool swapped = (df != 1);
    const MultiPoly& lin = swapped ? g : f;
    const MultiPoly& other = swapped ? f : g;
    auto lc = lin.coefficients_in(var);
    const MultiPoly& a = lc[1];
    const MultiPoly b = lc.size() > 1 ? lc[0] : MultiPoly::zero();
    auto oc = other.coefficients_in(var);
    int n = static_cast<int>(oc.size()) - 1;
    // sum_k c_k * (-b)^k * a^(n-k)
    MultiPoly res = MultiPoly::zero();
    MultiPoly negb_pow = MultiPoly::one();
    std::vector<MultiPoly> a_pows(static_cast<size_t>(n) + 1, MultiPoly::one());
    for (int i = 1; i <= n; ++i) a_pows[static_cast<size_t>(i)] = a_pows[static_cast<size_t>(i - 1)] * a;
    for (int k = 0; k <= n; ++k) {
      res += oc[static_cast<size_t>(k)] * negb_pow * a_pows[static_cast<size_t>(n - k)];
      if (k < n) negb_pow = negb_pow * (-b);
    }
    // Res(f,g) = (-1)^(df*dg) Res(g,f); restore orientation when we swapped.
    if (swapped && (df * dg) % 2 != 0) res = -res;
    return res;
  }
  return bareiss_determinant(sylvester_matrix(f, g, var));
}

}  // namespace incgeo
