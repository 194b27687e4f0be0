#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "incgeo/config.hpp"
#include "incgeo/flecnode.hpp"
#include "incgeo/linalg.hpp"
#include "incgeo/unipoly.hpp"

namespace incgeo {

inline QVec gradient_at(const MultiPoly& f, const AffPoint& p) {
  QVec g;
  for (Var v : f.vars()) g.push_back(f.partial_derivative(v).eval(p.c));
  return g;
}

inline bool is_singular_point(const MultiPoly& f, const AffPoint& p) {
  if (sgn(f.eval(p.c)) != 0)
    throw std::invalid_argument("is_singular_point: p is not on the surface");
  return qvec_is_zero(gradient_at(f, p));
}

// Smallest index of a nonzero Taylor component of f at p; 1 iff non-singular.
inline int multiplicity_at(const MultiPoly& f, const AffPoint& p) {
  if (sgn(f.eval(p.c)) != 0)
    throw std::invalid_argument("multiplicity_at: p is not on the surface");
  auto comps = taylor_components(f, p.c);
  for (size_t k = 1; k < comps.size(); ++k)
    if (!comps[k].is_zero()) return static_cast<int>(k);
  throw std::logic_error("multiplicity_at: all Taylor components vanish");
}

// Tangent hyperplane grad f(p) . (x - p) = 0 at a non-singular point.
inline HyperplaneH tangent_plane(const MultiPoly& f, const AffPoint& p) {
  QVec g = gradient_at(f, p);
  if (qvec_is_zero(g)) throw std::invalid_argument("tangent_plane: singular point");
  QVec coeffs;
  coeffs.push_back(-qvec_dot(g, p.c));  // A0
  for (const auto& gi : g) coeffs.push_back(gi);
  return make_hyperplane(std::move(coeffs));
}

// Flat point test: the second Taylor component restricted to a rational
// basis of the tangent plane is the zero quadratic form.
inline bool is_flat_point(const MultiPoly& f, const AffPoint& p) {
  QVec g = gradient_at(f, p);
  if (qvec_is_zero(g)) throw std::invalid_argument("is_flat_point: singular point");
  auto comps = taylor_components(f, p.c);
  if (comps.size() < 3) return true;  // no second-order term at all
  const MultiPoly& f2 = comps[2];
  if (f2.is_zero()) return true;
  auto basis = nullspace(QMat{g});  // d-1 independent tangent directions
  // restrict to the tangent plane: x := s*u + t*w over each basis pair
  // (for d=3 the basis has exactly two vectors; in general test all pairs,
  // including squares, via the parameter substitution below).
  const auto& vars = f.vars();
  std::map<Var, MultiPoly> sub;
  // parameters: reuse v1..v4 as the tangent-plane coordinates
  static const Var params[4] = {Var::v1, Var::v2, Var::v3, Var::v4};
  if (basis.size() > 4) throw std::invalid_argument("is_flat_point: dimension too large");
  for (size_t i = 0; i < vars.size(); ++i) {
    MultiPoly expr = MultiPoly::zero();
    for (size_t b = 0; b < basis.size(); ++b)
      expr += MultiPoly::constant(basis[b][i]) * MultiPoly::variable(params[b]);
    sub.emplace(vars[i], expr);
  }
  return f2.substitute(sub).is_zero();
}

// Order of vanishing of t -> f(p + t dir) at t = 0 for a plane curve f and
// a line through p not contained in the curve.
inline int line_curve_intersection_multiplicity(const MultiPoly& f, const ProjLine& ell,
                                                const AffPoint& p) {
  if (f.vars().size() != 2)
    throw std::invalid_argument("line_curve_intersection_multiplicity: f must be bivariate");
  if (!point_on_line(p, ell))
    throw std::invalid_argument("line_curve_intersection_multiplicity: p not on the line");
  if (sgn(f.eval(p.c)) != 0)
    throw std::invalid_argument("line_curve_intersection_multiplicity: p not on the curve");
  MultiPoly restricted = restrict_to_line(f, p.c, ell.dir);
  if (restricted.is_zero())
    throw std::invalid_argument("line_curve_intersection_multiplicity: line contained in curve");
  UniPoly u = to_unipoly(restricted, Var::t);
  for (size_t k = 0; k < u.size(); ++k)
    if (sgn(u[k]) != 0) return static_cast<int>(k);
  throw std::logic_error("line_curve_intersection_multiplicity: unreachable");
}

// The unique quadric through three pairwise skew lines, by solving the
// nine point-conditions (t = 0, 1, -1 on each line) on the ten quadric
// coefficients; the solution space must be one-dimensional, and the result
// is re-verified to vanish on all three lines.
inline MultiPoly regulus_through(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3) {
  const ProjLine* ls[3] = {&l1, &l2, &l3};
  for (int i = 0; i < 3; ++i) {
    if (ls[i]->dim() != 3) throw std::invalid_argument("regulus_through: lines must be in 3-space");
    for (int j = i + 1; j < 3; ++j)
      if (lines_coplanar(*ls[i], *ls[j]))
        throw std::invalid_argument("regulus_through: input lines are not pairwise skew");
  }
  // quadric monomial basis: 1, x, y, z, x^2, xy, xz, y^2, yz, z^2
  auto row_for = [](const AffPoint& p) {
    const Rational &x = p.c[0], &y = p.c[1], &z = p.c[2];
    return QVec{Rational(1), x, y, z, x * x, x * y, x * z, y * y, y * z, z * z};
  };
  QMat sys;
  for (int i = 0; i < 3; ++i)
    for (long t : {0L, 1L, -1L}) sys.push_back(row_for(point_at(*ls[i], Rational(t))));
  auto basis = nullspace(sys);
  if (basis.size() != 1)
    throw std::invalid_argument("regulus_through: solution space dimension is not 1");
  const QVec& c = basis[0];
  MultiPoly q = MultiPoly::constant(c[0], {Var::x, Var::y, Var::z});
  const Var vs[3] = {Var::x, Var::y, Var::z};
  for (int i = 0; i < 3; ++i) q += MultiPoly::constant(c[1 + static_cast<size_t>(i)]) * MultiPoly::variable(vs[i]);
  q += MultiPoly::constant(c[4]) * MultiPoly::variable(Var::x, 2);
  q += MultiPoly::constant(c[5]) * MultiPoly::variable(Var::x) * MultiPoly::variable(Var::y);
  q += MultiPoly::constant(c[6]) * MultiPoly::variable(Var::x) * MultiPoly::variable(Var::z);
  q += MultiPoly::constant(c[7]) * MultiPoly::variable(Var::y, 2);
  q += MultiPoly::constant(c[8]) * MultiPoly::variable(Var::y) * MultiPoly::variable(Var::z);
  q += MultiPoly::constant(c[9]) * MultiPoly::variable(Var::z, 2);
  q = q.monic().with_vars({Var::x, Var::y, Var::z});
  for (int i = 0; i < 3; ++i)
    if (!vanishes_on_line(q, *ls[i]))
      throw std::logic_error("regulus_through: candidate quadric misses an input line");
  return q;
}

enum class QuadricClass { PLANE_PAIR, REGULUS, NON_REGULUS_RULED, NO_REAL_LINES, CONE };

inline const char* to_string(QuadricClass c) {
  switch (c) {
    case QuadricClass::PLANE_PAIR: return "PLANE_PAIR";
    case QuadricClass::REGULUS: return "REGULUS";
    case QuadricClass::NON_REGULUS_RULED: return "NON_REGULUS_RULED";
    case QuadricClass::NO_REAL_LINES: return "NO_REAL_LINES";
    case QuadricClass::CONE: return "CONE";
  }
  return "?";
}

struct QuadricClassification {
  QuadricClass cls;
  int rank = 0;
  int positive = 0;  // inertia of the homogeneous 4x4 matrix (sign-normalized)
  int negative = 0;
  std::optional<AffPoint> apex;  // for CONE
};

namespace detail {

// Exact congruence diagonalization; returns the diagonal entries.
inline QVec congruence_diagonal(QMat m) {
  const size_t n = m.size();
  QVec diag;
  for (size_t k = 0; k < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t swap_j = n;
      for (size_t j = k + 1; j < n; ++j)
        if (sgn(m[j][j]) != 0) {
          swap_j = j;
          break;
        }
      if (swap_j < n) {
        std::swap(m[k], m[swap_j]);
        for (auto& row : m) std::swap(row[k], row[swap_j]);
      } else {
        size_t oi = n, oj = n;
        for (size_t i = k; i < n && oi == n; ++i)
          for (size_t j = i + 1; j < n; ++j)
            if (sgn(m[i][j]) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi == n) break;  // remaining block is zero
        // row/col i += row/col j makes the (i,i) entry 2*m[i][j]
        for (size_t c = 0; c < n; ++c) m[oi][c] += m[oj][c];
        for (size_t r = 0; r < n; ++r) m[r][oi] += m[r][oj];
        if (oi != k) {
          std::swap(m[k], m[oi]);
          for (auto& row : m) std::swap(row[k], row[oi]);
        }
      }
    }
    if (sgn(m[k][k]) == 0) continue;
    for (size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      Rational factor = m[i][k] / m[k][k];
      for (size_t c = 0; c < n; ++c) m[i][c] -= factor * m[k][c];
      for (size_t r = 0; r < n; ++r) m[r][i] -= factor * m[r][k];
    }
  }
  for (size_t k = 0; k < n; ++k) diag.push_back(m[k][k]);
  return diag;
}

}  // namespace detail

// Homogeneous symmetric matrix of a degree-2 trivariate polynomial over
// coordinates (x0, x, y, z) with x0 the homogenizer.
inline QMat quadric_matrix(const MultiPoly& f_in) {
  MultiPoly f = f_in.with_vars({Var::x, Var::y, Var::z});
  QMat m(4, QVec(4, Rational(0)));
  auto var_index = [](Var v) {
    switch (v) {
      case Var::x: return 1;
      case Var::y: return 2;
      case Var::z: return 3;
      default: throw std::logic_error("quadric_matrix: unexpected variable");
    }
  };
  for (const auto& [mono, c] : f.terms()) {
    std::vector<int> idx;
    for (Var v : {Var::x, Var::y, Var::z})
      for (unsigned e = 0; e < mono_exp(mono, v); ++e) idx.push_back(var_index(v));
    while (idx.size() < 2) idx.push_back(0);  // pad with the homogenizer
    if (idx.size() != 2) throw std::invalid_argument("quadric_matrix: degree exceeds 2");
    int i = idx[0], j = idx[1];
    if (i == j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] += c;
    else {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] += c / 2;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] += c / 2;
    }
  }
  return m;
}

// Real affine classification of a square-free quadric via the rank and
// signature of the homogeneous 4x4 matrix (exact congruence), together with
// the projective apex/radical location.
inline QuadricClassification classify_quadric(const MultiPoly& f_in) {
  MultiPoly f = f_in.with_vars({Var::x, Var::y, Var::z});
  if (f.degree() != 2) throw std::invalid_argument("classify_quadric: degree must be 2");
  if (!is_square_free(f)) throw std::invalid_argument("classify_quadric: f must be square-free");

  QMat m = quadric_matrix(f);
  QVec diag = detail::congruence_diagonal(m);
  QuadricClassification out{};
  for (const auto& d : diag) {
    if (sgn(d) > 0) ++out.positive;
    else if (sgn(d) < 0) ++out.negative;
  }
  if (out.positive < out.negative) std::swap(out.positive, out.negative);
  out.rank = out.positive + out.negative;

  auto kernel = nullspace(quadric_matrix(f));
  const int p = out.positive, q = out.negative;

  if (out.rank == 4) {
    out.cls = (p == 2 && q == 2) ? QuadricClass::REGULUS : QuadricClass::NO_REAL_LINES;
    return out;
  }
  if (out.rank == 3) {
    const QVec& u = kernel.at(0);
    bool affine_apex = sgn(u[0]) != 0;
    if (p == 3 || q == 3) {
      // imaginary cone: the apex is the only real point (or nothing affine)
      out.cls = QuadricClass::NO_REAL_LINES;
      return out;
    }
    if (affine_apex) {
      out.cls = QuadricClass::CONE;
      AffPoint apex;
      for (int i = 1; i <= 3; ++i) apex.c.push_back(u[static_cast<size_t>(i)] / u[0]);
      out.apex = apex;
    } else {
      // projective cone with apex at infinity: a cylinder over a real conic
      out.cls = QuadricClass::NON_REGULUS_RULED;
    }
    return out;
  }
  if (out.rank == 2) {
    if (p == 1 && q == 1) {
      out.cls = QuadricClass::PLANE_PAIR;
      return out;
    }
    // (2,0): the real locus is the projectivized kernel (a line)
    bool kernel_affine = false;
    for (const auto& v : kernel)
      if (sgn(v[0]) != 0) kernel_affine = true;
    out.cls = kernel_affine ? QuadricClass::NON_REGULUS_RULED : QuadricClass::NO_REAL_LINES;
    return out;
  }
  // rank <= 1 cannot occur for a square-free quadratic
  throw std::logic_error("classify_quadric: unexpected rank for a square-free quadric");
}

}  // namespace incgeo
