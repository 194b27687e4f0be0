#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "incgeo/geometry.hpp"
#include "incgeo/multipoly.hpp"
#include "incgeo/poly_gcd.hpp"

namespace incgeo {

// true iff g restricted to the line is the zero univariate polynomial.
inline bool vanishes_on_line(const MultiPoly& g, const ProjLine& ell) {
  if (g.vars().size() != ell.dim())
    throw std::invalid_argument("vanishes_on_line: dimension mismatch");
  return restrict_to_line(g, ell.base.c, ell.dir).is_zero();
}

struct ComponentMeta {
  bool is_plane = false;
  std::optional<AffPoint> cone_apex;
  std::optional<bool> is_regulus;
};

// A square-free polynomial in 3 or 4 variables plus caller-supplied
// irreducible factors and per-component metadata.
struct SurfaceModel {
  MultiPoly f;
  std::vector<MultiPoly> factors;
  std::vector<ComponentMeta> component_meta;

  void validate() const {
    if (f.is_zero()) throw std::invalid_argument("SurfaceModel: zero polynomial");
    size_t nv = f.vars().size();
    if (nv != 3 && nv != 4 && nv != 2)
      throw std::invalid_argument("SurfaceModel: expected 2, 3 or 4 variables");
    if (!factors.empty()) {
      MultiPoly prod = MultiPoly::one();
      for (const auto& q : factors) prod = prod * q;
      if (prod.monic() != f.monic())
        throw std::invalid_argument("SurfaceModel: factor product differs from f");
      if (!component_meta.empty() && component_meta.size() != factors.size())
        throw std::invalid_argument("SurfaceModel: component_meta size mismatch");
      for (size_t i = 0; i < factors.size(); ++i) {
        bool plane_flag = i < component_meta.size() && component_meta[i].is_plane;
        if (plane_flag != (factors[i].degree() == 1))
          throw std::invalid_argument("SurfaceModel: is_plane inconsistent with factor degree");
      }
    }
  }
};

// A finite point set P and line set L with exact rational coordinates.
struct Config {
  size_t ambient_dim = 3;
  std::vector<AffPoint> points;
  std::vector<ProjLine> lines;
  std::optional<SurfaceModel> surface;

  void validate() const {
    std::set<AffPoint> pset;
    for (const auto& p : points) {
      if (p.dim() != ambient_dim) throw std::invalid_argument("Config: point dimension mismatch");
      if (!pset.insert(p).second) throw std::invalid_argument("Config: duplicate point");
    }
    std::set<ProjLine> lset;
    for (const auto& ell : lines) {
      if (ell.dim() != ambient_dim) throw std::invalid_argument("Config: line dimension mismatch");
      if (!lset.insert(ell).second) throw std::invalid_argument("Config: duplicate line");
    }
    if (surface) {
      surface->validate();
      for (const auto& ell : lines)
        if (ell.contained && !vanishes_on_line(surface->f, ell))
          throw std::invalid_argument("Config: line marked contained does not lie on the surface");
    }
  }
};

}  // namespace incgeo
