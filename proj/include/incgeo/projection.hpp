#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "incgeo/config.hpp"
#include "incgeo/incidence.hpp"

namespace incgeo {

struct ProjectionDescription {
  std::vector<QVec> directions;        // the w vector of each single step
  std::vector<size_t> dropped_coords;  // coordinate deleted after each step
  int retries = 0;
};

namespace detail {

// One projection step h(v) = v - ((v.w)/(w.w)) w followed by deletion of a
// coordinate where w is nonzero; a linear map with kernel span(w).
struct ProjStep {
  QVec w;
  Rational ww;
  size_t drop;

  QVec apply(const QVec& v) const {
    Rational t = qvec_dot(v, w) / ww;
    QVec out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i == drop) continue;
      out.push_back(v[i] - t * w[i]);
    }
    return out;
  }
};

}  // namespace detail

// Generic projection of a config down to target_dim, one hyperplane step at
// a time, with seeded rational directions. "Generic" is randomized with
// verification: projected points distinct, projected lines distinct, every
// incidence preserved with no new ones, and sampled non-coplanar line
// triples still non-coplanar; any failure reseeds (bounded retries).
inline std::pair<Config, ProjectionDescription> project_generic(const Config& cfg,
                                                                size_t target_dim,
                                                                std::uint64_t seed,
                                                                int triple_samples = 50) {
  if (target_dim >= cfg.ambient_dim)
    throw std::invalid_argument("project_generic: target dimension not smaller than ambient");
  if (target_dim < 2) throw std::invalid_argument("project_generic: target dimension too small");

  SplitMix64 rng(seed);
  Config current = cfg;
  current.surface.reset();  // the algebraic projection of the surface is out of scope
  ProjectionDescription desc;
  const long long incidences_before = count_incidences(cfg);

  while (current.ambient_dim > target_dim) {
    const size_t d = current.ambient_dim;
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
      ++desc.retries;
      detail::ProjStep step;
      step.w.assign(d, Rational(0));
      for (auto& c : step.w) c = Rational(rng.int_in(-19, 19));
      if (qvec_is_zero(step.w)) continue;
      step.ww = qvec_dot(step.w, step.w);
      step.drop = 0;
      while (sgn(step.w[step.drop]) == 0) ++step.drop;

      Config next;
      next.ambient_dim = d - 1;
      bool ok = true;
      std::set<AffPoint> pset;
      for (const auto& p : current.points) {
        AffPoint q{step.apply(p.c)};
        if (!pset.insert(q).second) {
          ok = false;
          break;
        }
        next.points.push_back(std::move(q));
      }
      if (!ok) continue;
      std::set<ProjLine> lset;
      for (const auto& ell : current.lines) {
        QVec dir = step.apply(ell.dir);
        if (qvec_is_zero(dir)) {
          ok = false;
          break;
        }
        ProjLine image = make_line(AffPoint{step.apply(ell.base.c)}, std::move(dir));
        image.contained = false;
        if (!lset.insert(image).second) {
          ok = false;
          break;
        }
        next.lines.push_back(std::move(image));
      }
      if (!ok) continue;
      // incidence preservation, exactly (and no new incidences)
      for (size_t i = 0; i < current.points.size() && ok; ++i)
        for (size_t j = 0; j < current.lines.size() && ok; ++j)
          if (point_on_line(current.points[i], current.lines[j]) &&
              !point_on_line(next.points[i], next.lines[j]))
            ok = false;
      if (!ok) continue;
      if (count_incidences(next) != incidences_before) continue;
      // sampled non-coplanar triples stay non-coplanar
      if (current.lines.size() >= 3) {
        for (int ts = 0; ts < triple_samples && ok; ++ts) {
          size_t a = rng.below(current.lines.size());
          size_t b = rng.below(current.lines.size());
          size_t c = rng.below(current.lines.size());
          if (a == b || b == c || a == c) continue;
          if (triple_coplanar(current.lines[a], current.lines[b], current.lines[c])) continue;
          if (triple_coplanar(next.lines[a], next.lines[b], next.lines[c])) ok = false;
        }
      }
      if (!ok) continue;

      desc.directions.push_back(step.w);
      desc.dropped_coords.push_back(step.drop);
      current = std::move(next);
      done = true;
    }
    if (!done)
      throw std::runtime_error("project_generic: retries exhausted (degenerate configuration)");
  }
  return {current, desc};
}

}  // namespace incgeo
