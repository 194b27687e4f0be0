#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "incgeo/linalg.hpp"
#include "incgeo/rational.hpp"

namespace incgeo {

struct AffPoint {
  QVec c;

  size_t dim() const { return c.size(); }
  friend bool operator==(const AffPoint& a, const AffPoint& b) { return a.c == b.c; }
  friend bool operator<(const AffPoint& a, const AffPoint& b) {
    if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
    for (size_t i = 0; i < a.c.size(); ++i) {
      int cmp = cmp_rat(a.c[i], b.c[i]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  }
  static int cmp_rat(const Rational& a, const Rational& b) { return cmp(a, b); }
};

inline AffPoint make_point(std::initializer_list<long> xs) {
  AffPoint p;
  for (long x : xs) p.c.push_back(Rational(x));
  return p;
}

// A line carried as (base point, direction); the direction is canonicalized
// (first nonzero entry 1) and the base is slid so its pivot coordinate is 0,
// which makes (base, direction) a unique key per line. For d=3 the Plucker
// six-tuple (pi01,pi02,pi03,pi23,pi31,pi12) is populated on construction.
struct ProjLine {
  AffPoint base;
  QVec dir;
  std::optional<std::array<Rational, 6>> plucker;
  bool contained = false;  // marked contained in the config surface

  size_t dim() const { return dir.size(); }
  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.base == b.base && a.dir == b.dir;
  }
  friend bool operator<(const ProjLine& a, const ProjLine& b) {
    if (!(a.base == b.base)) return a.base < b.base;
    AffPoint da{a.dir}, db{b.dir};
    return da < db;
  }
};

inline ProjLine make_line(AffPoint base, QVec dir) {
  if (base.c.size() != dir.size()) throw std::invalid_argument("make_line: dimension mismatch");
  size_t pivot = dir.size();
  for (size_t i = 0; i < dir.size(); ++i)
    if (sgn(dir[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot == dir.size()) throw std::invalid_argument("make_line: zero direction");
  Rational lead = dir[pivot];
  for (auto& d : dir) d /= lead;
  // slide base so base[pivot] = 0
  Rational t = base.c[pivot];
  for (size_t i = 0; i < base.c.size(); ++i) base.c[i] -= t * dir[i];

  ProjLine ell;
  ell.base = std::move(base);
  ell.dir = std::move(dir);
  if (ell.dir.size() == 3) {
    // pi_{i,j} = x_i y_j - x_j y_i on homogeneous (1, base), (1, base+dir):
    // direction part d = dir, moment part m = base x dir.
    QVec m = qvec_cross(ell.base.c, ell.dir);
    ell.plucker = {ell.dir[0], ell.dir[1], ell.dir[2], m[0], m[1], m[2]};
    Rational k = (*ell.plucker)[0] * (*ell.plucker)[3] + (*ell.plucker)[1] * (*ell.plucker)[4] +
                 (*ell.plucker)[2] * (*ell.plucker)[5];
    if (sgn(k) != 0) throw std::logic_error("make_line: Klein form nonzero");
  }
  return ell;
}

inline ProjLine line_from_points(const AffPoint& x, const AffPoint& y) {
  if (x.c.size() != y.c.size()) throw std::invalid_argument("line_from_points: dimension mismatch");
  if (x == y) throw std::invalid_argument("line_from_points: identical points");
  return make_line(x, qvec_sub(y.c, x.c));
}

inline Rational klein_form(const std::array<Rational, 6>& p) {
  return p[0] * p[3] + p[1] * p[4] + p[2] * p[5];
}

inline bool point_on_line(const AffPoint& p, const ProjLine& ell) {
  if (p.c.size() != ell.dim()) throw std::invalid_argument("point_on_line: dimension mismatch");
  QVec delta = qvec_sub(p.c, ell.base.c);
  size_t pivot = 0;
  while (pivot < ell.dir.size() && sgn(ell.dir[pivot]) == 0) ++pivot;
  Rational t = delta[pivot] / ell.dir[pivot];
  for (size_t i = 0; i < delta.size(); ++i)
    if (delta[i] != t * ell.dir[i]) return false;
  return true;
}

// Parameter of p along ell (p must lie on ell).
inline Rational line_parameter(const ProjLine& ell, const AffPoint& p) {
  QVec delta = qvec_sub(p.c, ell.base.c);
  size_t pivot = 0;
  while (pivot < ell.dir.size() && sgn(ell.dir[pivot]) == 0) ++pivot;
  return delta[pivot] / ell.dir[pivot];
}

inline AffPoint point_at(const ProjLine& ell, const Rational& t) {
  AffPoint p;
  p.c = qvec_add(ell.base.c, qvec_scale(ell.dir, t));
  return p;
}

// true iff the two (distinct) lines lie in a common 2-flat.
inline bool lines_coplanar(const ProjLine& a, const ProjLine& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lines_coplanar: dimension mismatch");
  if (a == b) throw std::invalid_argument("lines_coplanar: identical lines");
  QMat m = {a.dir, b.dir, qvec_sub(b.base.c, a.base.c)};
  return rank(m) <= 2;
}

// Exact intersection point of two distinct lines, if any.
inline std::optional<AffPoint> line_line_intersection(const ProjLine& a, const ProjLine& b) {
  const size_t d = a.dim();
  QMat sys(d, QVec(2));
  QVec rhs(d);
  for (size_t i = 0; i < d; ++i) {
    sys[i][0] = a.dir[i];
    sys[i][1] = -b.dir[i];
    rhs[i] = b.base.c[i] - a.base.c[i];
  }
  // parallel directions never yield a unique affine intersection
  QMat dirs = {a.dir, b.dir};
  if (rank(dirs) < 2) return std::nullopt;
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return point_at(a, (*sol)[0]);
}

// Canonical 2-flat: reduced row echelon span plus base reduced against it.
struct Flat2 {
  AffPoint base;
  QMat span;  // two rows, RREF

  friend bool operator==(const Flat2& a, const Flat2& b) {
    return a.base == b.base && a.span == b.span;
  }
  friend bool operator<(const Flat2& a, const Flat2& b) {
    if (!(a.base == b.base)) return a.base < b.base;
    for (size_t r = 0; r < 2; ++r) {
      AffPoint ra{a.span[r]}, rb{b.span[r]};
      if (!(ra == rb)) return ra < rb;
    }
    return false;
  }
};

inline Flat2 make_flat(const AffPoint& base_in, QVec u, QVec v) {
  QMat span = {std::move(u), std::move(v)};
  auto pivots = rref(span);
  if (pivots.size() != 2) throw std::invalid_argument("make_flat: span vectors dependent");
  QVec base = base_in.c;
  for (size_t r = 0; r < 2; ++r) {
    Rational f = base[pivots[r]];
    for (size_t j = 0; j < base.size(); ++j) base[j] -= f * span[r][j];
  }
  return Flat2{AffPoint{std::move(base)}, std::move(span)};
}

inline bool flat_contains_point(const Flat2& f, const AffPoint& p) {
  QMat m = f.span;
  m.push_back(qvec_sub(p.c, f.base.c));
  return rank(m) == 2;
}

inline bool flat_contains_line(const Flat2& f, const ProjLine& ell) {
  QMat m = f.span;
  m.push_back(ell.dir);
  if (rank(m) != 2) return false;
  return flat_contains_point(f, ell.base);
}

// The canonical Flat2 containing two coplanar distinct lines.
inline Flat2 span_2flat(const ProjLine& a, const ProjLine& b) {
  if (a == b) throw std::invalid_argument("span_2flat: identical lines");
  if (!lines_coplanar(a, b)) throw std::invalid_argument("span_2flat: skew lines");
  QMat dirs = {a.dir, b.dir};
  if (rank(dirs) == 2) return make_flat(a.base, a.dir, b.dir);
  // parallel: span with the base offset
  QVec off = qvec_sub(b.base.c, a.base.c);
  return make_flat(a.base, a.dir, off);
}

// Do three lines lie in a common 2-flat?
inline bool triple_coplanar(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  if (!lines_coplanar(a, b)) return false;
  Flat2 f = span_2flat(a, b);
  return flat_contains_line(f, c);
}

// Hyperplane A0 + A1 x1 + ... + Ad xd = 0 (A0 is the homogenizing
// coefficient); canonicalized by the first nonzero of A1..Ad.
struct HyperplaneH {
  QVec coeffs;  // size d+1

  size_t dim() const { return coeffs.size() - 1; }
  friend bool operator==(const HyperplaneH& a, const HyperplaneH& b) {
    return a.coeffs == b.coeffs;
  }
};

inline HyperplaneH make_hyperplane(QVec coeffs) {
  size_t pivot = 0;
  for (size_t i = 1; i < coeffs.size(); ++i)
    if (sgn(coeffs[i]) != 0) {
      pivot = i;
      break;
    }
  if (pivot == 0) throw std::invalid_argument("make_hyperplane: A1..Ad all zero");
  Rational lead = coeffs[pivot];
  for (auto& c : coeffs) c /= lead;
  return HyperplaneH{std::move(coeffs)};
}

inline bool hyperplane_contains_point(const HyperplaneH& h, const AffPoint& p) {
  Rational s = h.coeffs[0];
  for (size_t i = 0; i < p.c.size(); ++i) s += h.coeffs[i + 1] * p.c[i];
  return sgn(s) == 0;
}

inline bool hyperplane_contains_line(const HyperplaneH& h, const ProjLine& ell) {
  Rational s(0);
  for (size_t i = 0; i < ell.dir.size(); ++i) s += h.coeffs[i + 1] * ell.dir[i];
  return sgn(s) == 0 && hyperplane_contains_point(h, ell.base);
}

struct LineInPlane {};  // containment outcome of line_plane_intersection

using HomogeneousPoint = std::array<Rational, 4>;  // (x0, x1, x2, x3)

// Intersection of a line and a plane in 3-space via the Plucker-side formula
// (A.d, A x m - A0 d) with d the direction part and m the moment part,
// cross-validated against the parametric solve on every call.
inline std::variant<LineInPlane, HomogeneousPoint> line_plane_intersection(
    const ProjLine& ell, const HyperplaneH& h) {
  if (ell.dim() != 3 || h.dim() != 3)
    throw std::invalid_argument("line_plane_intersection: requires d=3");
  if (hyperplane_contains_line(h, ell)) return LineInPlane{};
  const auto& pl = *ell.plucker;
  QVec d = {pl[0], pl[1], pl[2]};
  QVec m = {pl[3], pl[4], pl[5]};
  QVec a = {h.coeffs[1], h.coeffs[2], h.coeffs[3]};
  const Rational& a0 = h.coeffs[0];
  Rational x0 = qvec_dot(a, d);
  QVec rest = qvec_sub(qvec_cross(a, m), qvec_scale(d, a0));
  HomogeneousPoint hp = {x0, rest[0], rest[1], rest[2]};

  // independent parametric cross-check: base + t*dir with A0 + A.(b+td) = 0
  Rational ad = qvec_dot(a, ell.dir);
  if (sgn(ad) == 0) {
    // parallel, not contained: the formula must give a point at infinity
    if (sgn(x0) != 0) throw std::logic_error("line_plane_intersection: cross-check failed");
  } else {
    Rational t = -(a0 + qvec_dot(a, ell.base.c)) / ad;
    AffPoint p = point_at(ell, t);
    if (sgn(x0) == 0) throw std::logic_error("line_plane_intersection: cross-check failed");
    for (size_t i = 0; i < 3; ++i)
      if (hp[i + 1] / x0 != p.c[i])
        throw std::logic_error("line_plane_intersection: formula disagrees with parametric solve");
  }
  return hp;
}

}  // namespace incgeo
