#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "incgeo/config.hpp"
#include "incgeo/interval.hpp"
#include "incgeo/surfaces.hpp"
#include "incgeo/unipoly.hpp"

namespace incgeo {

// --- counting kernels ----------------------------------------------------

inline long long count_incidences(const Config& cfg) {
  long long count = 0;
  for (const auto& p : cfg.points)
    for (const auto& ell : cfg.lines)
      if (point_on_line(p, ell)) ++count;
  return count;
}

// All points of the ambient space (not only P) incident to >= r lines of L,
// with their degrees; computed from pairwise line intersections.
inline std::vector<std::pair<AffPoint, int>> rich_points(const Config& cfg, int r) {
  if (r < 2) throw std::invalid_argument("rich_points: r must be >= 2");
  std::set<AffPoint> candidates;
  for (size_t i = 0; i < cfg.lines.size(); ++i)
    for (size_t j = i + 1; j < cfg.lines.size(); ++j) {
      auto p = line_line_intersection(cfg.lines[i], cfg.lines[j]);
      if (p) candidates.insert(*p);
    }
  std::vector<std::pair<AffPoint, int>> out;
  for (const auto& p : candidates) {
    int deg = 0;
    for (const auto& ell : cfg.lines)
      if (point_on_line(p, ell)) ++deg;
    if (deg >= r) out.emplace_back(p, deg);
  }
  return out;  // set iteration: deterministic order
}

// Maximum number of lines of L contained in a common 2-flat. Exact O(n^3):
// span a canonical Flat2 for every coplanar pair, deduplicate, count.
inline int max_coplanar_s(const Config& cfg) {
  const auto& L = cfg.lines;
  if (L.size() < 2) return static_cast<int>(L.size());
  std::set<Flat2> flats;
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = i + 1; j < L.size(); ++j)
      if (lines_coplanar(L[i], L[j])) flats.insert(span_2flat(L[i], L[j]));
  int s = 1;
  for (const auto& f : flats) {
    int count = 0;
    for (const auto& ell : L)
      if (flat_contains_line(f, ell)) ++count;
    s = std::max(s, count);
  }
  return s;
}

// --- component assignment -------------------------------------------------

struct AssignmentTables {
  std::vector<int> point_component;           // first factor vanishing at the point
  std::vector<int> line_component;            // first factor containing; -1 if line not marked contained
  long long cross_incidences = 0;             // point and line assigned to different factors
  std::vector<long long> per_line_cross;
  long long bound_nD = 0;                     // n * deg(f)
  bool within_bound = false;
};

inline AssignmentTables assign_components(const Config& cfg) {
  if (!cfg.surface || cfg.surface->factors.empty())
    throw std::invalid_argument("assign_components: config has no factored surface");
  const auto& factors = cfg.surface->factors;
  AssignmentTables out;
  for (const auto& p : cfg.points) {
    int idx = -1;
    for (size_t i = 0; i < factors.size(); ++i)
      if (sgn(factors[i].eval(p.c)) == 0) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) throw std::invalid_argument("assign_components: point lies on no factor");
    out.point_component.push_back(idx);
  }
  for (const auto& ell : cfg.lines) {
    if (!ell.contained) {
      out.line_component.push_back(-1);
      continue;
    }
    int idx = -1;
    for (size_t i = 0; i < factors.size(); ++i)
      if (vanishes_on_line(factors[i], ell)) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0)
      throw std::invalid_argument("assign_components: contained line lies in no factor");
    out.line_component.push_back(idx);
  }
  out.per_line_cross.assign(cfg.lines.size(), 0);
  for (size_t j = 0; j < cfg.lines.size(); ++j) {
    if (out.line_component[j] < 0) continue;
    for (size_t i = 0; i < cfg.points.size(); ++i)
      if (out.point_component[i] != out.line_component[j] &&
          point_on_line(cfg.points[i], cfg.lines[j])) {
        ++out.per_line_cross[j];
        ++out.cross_incidences;
      }
  }
  out.bound_nD = static_cast<long long>(cfg.lines.size()) * cfg.surface->f.degree();
  out.within_bound = out.cross_incidences <= out.bound_nD;
  return out;
}

// --- conical tagging --------------------------------------------------------

struct ConicalTagging {
  // one entry per incidence (point index, line index, conical?)
  std::vector<std::tuple<size_t, size_t, bool>> incidences;
  long long conical_count = 0;
};

// (p, ell) is conical iff p is the apex of a cone component fully
// containing ell.
inline ConicalTagging tag_conical(const Config& cfg) {
  if (!cfg.surface) throw std::invalid_argument("tag_conical: config has no surface");
  const auto& sm = *cfg.surface;
  std::vector<std::pair<AffPoint, const MultiPoly*>> cones;
  for (size_t i = 0; i < sm.component_meta.size(); ++i)
    if (sm.component_meta[i].cone_apex)
      cones.emplace_back(*sm.component_meta[i].cone_apex, &sm.factors[i]);
  ConicalTagging out;
  std::vector<std::vector<bool>> line_in_cone(cones.size(),
                                              std::vector<bool>(cfg.lines.size(), false));
  for (size_t c = 0; c < cones.size(); ++c)
    for (size_t j = 0; j < cfg.lines.size(); ++j)
      line_in_cone[c][j] = vanishes_on_line(*cones[c].second, cfg.lines[j]);
  for (size_t i = 0; i < cfg.points.size(); ++i)
    for (size_t j = 0; j < cfg.lines.size(); ++j) {
      if (!point_on_line(cfg.points[i], cfg.lines[j])) continue;
      bool conical = false;
      for (size_t c = 0; c < cones.size(); ++c)
        if (cones[c].first == cfg.points[i] && line_in_cone[c][j]) {
          conical = true;
          break;
        }
      out.incidences.emplace_back(i, j, conical);
      if (conical) ++out.conical_count;
    }
  if (out.conical_count > static_cast<long long>(cfg.lines.size()))
    throw std::logic_error("tag_conical: conical count exceeds the number of lines");
  return out;
}

// --- derivative chain --------------------------------------------------------

struct ChainAssignment {
  std::vector<MultiPoly> chain;  // f_0 = f, f_{j+1} = sqfree(d f_j / d var)
  std::vector<int> point_level;
  std::vector<int> line_level;
  std::vector<std::string> claim_violations;  // should stay empty
};

inline ChainAssignment derivative_chain_assign(const MultiPoly& f, const Config& cfg, Var var) {
  if (!is_square_free(f)) throw std::invalid_argument("derivative_chain_assign: f not square-free");
  for (const auto& p : cfg.points)
    if (sgn(f.eval(p.c)) != 0)
      throw std::invalid_argument("derivative_chain_assign: a point is off Z(f)");
  for (const auto& ell : cfg.lines)
    if (!vanishes_on_line(f, ell))
      throw std::invalid_argument("derivative_chain_assign: a line is not contained in Z(f)");

  ChainAssignment out;
  out.chain.push_back(f.monic());
  while (true) {
    MultiPoly d = out.chain.back().partial_derivative(var);
    if (d.is_zero()) break;
    out.chain.push_back(square_free_part(d));
    if (out.chain.back().is_constant()) break;
  }
  const auto& chain = out.chain;

  auto eval_at = [&](const MultiPoly& g, const AffPoint& p) {
    return g.with_vars(f.vars()).eval(p.c);
  };
  for (size_t i = 0; i < cfg.points.size(); ++i) {
    int level = -1;
    for (size_t j = 0; j + 1 < chain.size(); ++j)
      if (sgn(eval_at(chain[j], cfg.points[i])) == 0 &&
          sgn(eval_at(chain[j + 1], cfg.points[i])) != 0) {
        level = static_cast<int>(j);
        break;
      }
    if (level < 0) {
      std::ostringstream os;
      os << "derivative_chain_assign: chain exhausted without assigning point #" << i;
      throw std::runtime_error(os.str());
    }
    out.point_level.push_back(level);
  }
  auto contained_in = [&](const MultiPoly& g, const ProjLine& ell) {
    return vanishes_on_line(g.with_vars(f.vars()), ell);
  };
  for (size_t i = 0; i < cfg.lines.size(); ++i) {
    int level = -1;
    for (size_t j = 0; j + 1 < chain.size(); ++j)
      if (contained_in(chain[j], cfg.lines[i]) && !contained_in(chain[j + 1], cfg.lines[i])) {
        level = static_cast<int>(j);
        break;
      }
    if (level < 0) {
      std::ostringstream os;
      os << "derivative_chain_assign: chain exhausted without assigning line #" << i;
      throw std::runtime_error(os.str());
    }
    out.line_level.push_back(level);
  }
  // a line assigned to level j can only contain points assigned to some
  // level k >= j; any counterexample is recorded
  for (size_t i = 0; i < cfg.lines.size(); ++i)
    for (size_t k = 0; k < cfg.points.size(); ++k)
      if (point_on_line(cfg.points[k], cfg.lines[i]) &&
          out.point_level[k] < out.line_level[i]) {
        std::ostringstream os;
        os << "claim violated: point #" << k << " at level " << out.point_level[k]
           << " lies on line #" << i << " at level " << out.line_level[i];
        out.claim_violations.push_back(os.str());
      }
  return out;
}

// --- bound evaluation --------------------------------------------------------

enum class BoundName { ST, GK3, FOCS4, TH13A, TH13B, TH14A, TH14B, CORMAINX, COR4DX };

inline const char* to_string(BoundName b) {
  switch (b) {
    case BoundName::ST: return "ST";
    case BoundName::GK3: return "GK3";
    case BoundName::FOCS4: return "FOCS4";
    case BoundName::TH13A: return "TH13A";
    case BoundName::TH13B: return "TH13B";
    case BoundName::TH14A: return "TH14A";
    case BoundName::TH14B: return "TH14B";
    case BoundName::CORMAINX: return "CORMAINX";
    case BoundName::COR4DX: return "COR4DX";
  }
  return "?";
}

inline std::optional<BoundName> bound_from_string(const std::string& s) {
  for (BoundName b : {BoundName::ST, BoundName::GK3, BoundName::FOCS4, BoundName::TH13A,
                      BoundName::TH13B, BoundName::TH14A, BoundName::TH14B, BoundName::CORMAINX,
                      BoundName::COR4DX})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

struct BoundParams {
  std::optional<Integer> m, n, D, s, q;
};

namespace detail {

inline Integer need(const std::optional<Integer>& v, const char* name, BoundName b) {
  if (!v)
    throw std::invalid_argument(std::string("bound_eval: missing parameter ") + name + " for " +
                                to_string(b));
  if (sgn(*v) < 0) throw std::invalid_argument("bound_eval: negative parameter");
  return *v;
}

inline Integer ipow(const Integer& b, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace detail

// C times the named bound expression, as a rational interval (exact where
// the exponents permit, bracketed to `digits` decimal places otherwise).
// The derivations behind TH13A/TH13B pick an internal pruning threshold of
// (nD/m)^(1/2); that choice only shapes the hidden constant, so it is not a
// runtime input here -- the caller's C absorbs it.
inline QInterval bound_eval(BoundName name, const BoundParams& prm, const Rational& C,
                            unsigned digits = 24) {
  using detail::ipow;
  using detail::need;
  auto root = [&](const Integer& radicand, unsigned k) {
    return kth_root_bracket(radicand, k, digits);
  };
  auto pt = [](const Integer& v) { return QInterval::exact(Rational(v)); };

  QInterval total = QInterval::exact(Rational(0));
  switch (name) {
    case BoundName::ST: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name);
      total = root(ipow(m, 2) * ipow(n, 2), 3) + pt(m) + pt(n);
      break;
    }
    case BoundName::GK3: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), s = need(prm.s, "s", name);
      total = root(ipow(m, 2) * ipow(n, 3), 4) + root(ipow(m, 2) * n * s, 3) + pt(m) + pt(n);
      break;
    }
    case BoundName::FOCS4: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), s = need(prm.s, "s", name),
              q = need(prm.q, "q", name);
      QInterval first = QInterval::exact(Rational(0));
      if (sgn(m) > 0) {
        QInterval log2m = log2_bracket(m, 16);
        QInterval sqrt_log = kth_root_bracket(log2m.hi, 2, digits);
        QInterval sqrt_log_lo = kth_root_bracket(log2m.lo, 2, digits);
        QInterval expnt{sqrt_log_lo.lo, sqrt_log.hi};
        QInterval factor = pow2_bracket(expnt, digits);
        first = factor * (root(ipow(m, 2) * ipow(n, 4), 5) + pt(m));
      }
      total = first + root(ipow(m, 2) * ipow(n, 2) * q, 4) + root(ipow(m, 2) * n * s, 3) + pt(n);
      break;
    }
    case BoundName::TH13A:
    case BoundName::TH13B: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), D = need(prm.D, "D", name),
              s = need(prm.s, "s", name);
      total = root(m * n * D, 2) + root(ipow(m, 2) * ipow(D, 2) * s, 3) + pt(m) + pt(n);
      if (name == BoundName::TH13B) total = total + pt(ipow(D, 3));
      break;
    }
    case BoundName::TH14A:
    case BoundName::TH14B: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), D = need(prm.D, "D", name),
              s = need(prm.s, "s", name);
      total = root(m * n, 2) * pt(D) + root(ipow(m, 2) * n * s, 3) + pt(n * D) + pt(m);
      if (name == BoundName::TH14B) total = total + pt(ipow(D, 6));
      break;
    }
    case BoundName::CORMAINX: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), s = need(prm.s, "s", name);
      total = root(ipow(m, 2) * ipow(s, 2), 3) + pt(m) + pt(n);
      break;
    }
    case BoundName::COR4DX: {
      Integer m = need(prm.m, "m", name), n = need(prm.n, "n", name), D = need(prm.D, "D", name),
              s = need(prm.s, "s", name), q = need(prm.q, "q", name);
      total = root(m * n, 2) * (pt(D) + root(q, 4)) + root(ipow(m, 2) * n * s, 3) + pt(n * D) +
              pt(m);
      break;
    }
  }
  if (sgn(C) < 0) throw std::invalid_argument("bound_eval: negative constant C");
  return total * C;
}

// Exact decision of I <= C * bound, refining the bracket until it resolves.
inline bool bound_holds(long long I, BoundName name, const BoundParams& prm, const Rational& C) {
  Rational i_rat(static_cast<long>(I));
  for (unsigned digits : {12u, 24u, 48u, 96u, 192u}) {
    QInterval v = bound_eval(name, prm, C, digits);
    if (i_rat <= v.lo) return true;
    if (i_rat > v.hi) return false;
    if (v.is_point()) return i_rat <= v.lo;
  }
  throw std::logic_error("bound_holds: bracket failed to resolve");
}

// --- incidence report ---------------------------------------------------------

struct BoundRow {
  BoundName name;
  Rational C;
  QInterval value;
  std::string ratio;  // I / value, 6 decimal places
  bool holds = false;
};

struct ComponentRow {
  int component = 0;
  long long points = 0;
  long long lines = 0;
};

struct IncidenceReport {
  long long I = 0;
  long long m = 0, n = 0;
  std::map<int, int> rich;  // r -> number of points incident to >= r lines
  int s = 0;
  long long conical_count = -1;  // -1 when no cone metadata
  long long cross_incidences = -1;
  std::vector<ComponentRow> per_component;
  std::vector<BoundRow> bounds;
};

inline IncidenceReport incidence_report(const Config& cfg,
                                        const std::vector<std::pair<BoundName, Rational>>& reqs,
                                        std::optional<Integer> q_override = std::nullopt) {
  IncidenceReport rep;
  rep.m = static_cast<long long>(cfg.points.size());
  rep.n = static_cast<long long>(cfg.lines.size());
  rep.I = count_incidences(cfg);
  auto rp = cfg.lines.size() >= 2 ? rich_points(cfg, 2) : std::vector<std::pair<AffPoint, int>>{};
  int max_deg = 0;
  for (const auto& [p, d] : rp) max_deg = std::max(max_deg, d);
  for (int r = 2; r <= max_deg; ++r) {
    int count = 0;
    for (const auto& [p, d] : rp)
      if (d >= r) ++count;
    rep.rich[r] = count;
  }
  rep.s = max_coplanar_s(cfg);
  if (cfg.surface && !cfg.surface->component_meta.empty()) {
    bool any_apex = false;
    for (const auto& cm : cfg.surface->component_meta)
      if (cm.cone_apex) any_apex = true;
    if (any_apex) rep.conical_count = tag_conical(cfg).conical_count;
  }
  if (cfg.surface && !cfg.surface->factors.empty()) {
    auto tables = assign_components(cfg);
    rep.cross_incidences = tables.cross_incidences;
    rep.per_component.resize(cfg.surface->factors.size());
    for (size_t i = 0; i < rep.per_component.size(); ++i)
      rep.per_component[i].component = static_cast<int>(i);
    for (int c : tables.point_component) ++rep.per_component[static_cast<size_t>(c)].points;
    for (int c : tables.line_component)
      if (c >= 0) ++rep.per_component[static_cast<size_t>(c)].lines;
  }

  BoundParams prm;
  prm.m = Integer(static_cast<long>(rep.m));
  prm.n = Integer(static_cast<long>(rep.n));
  if (cfg.surface) prm.D = Integer(cfg.surface->f.degree());
  prm.s = Integer(static_cast<long>(rep.s));
  // q defaults to n, the trivial hyperplane/quadric richness bound
  prm.q = q_override ? *q_override : Integer(static_cast<long>(rep.n));
  for (const auto& [name, C] : reqs) {
    BoundRow row{name, C, bound_eval(name, prm, C), "", false};
    row.holds = bound_holds(rep.I, name, prm, C);
    Rational mid = (row.value.lo + row.value.hi) / 2;
    row.ratio = sgn(mid) == 0 ? "inf" : decimal_string(Rational(static_cast<long>(rep.I)) / mid, 6);
    rep.bounds.push_back(std::move(row));
  }
  return rep;
}

// --- lemma suite ----------------------------------------------------------------

struct ComponentCatalog {
  QuadricClass cls;          // degree-2 components
  bool plane = false;        // degree-1 components
  std::optional<AffPoint> apex;
};

inline std::vector<ComponentCatalog> catalog_components(const SurfaceModel& sm) {
  std::vector<ComponentCatalog> out;
  for (size_t i = 0; i < sm.factors.size(); ++i) {
    const MultiPoly& q = sm.factors[i];
    ComponentCatalog cc{QuadricClass::NO_REAL_LINES, false, std::nullopt};
    bool three_space = true;
    for (Var v : q.support())
      if (v != Var::x && v != Var::y && v != Var::z) three_space = false;
    if (q.degree() == 1) {
      cc.plane = true;
    } else if (q.degree() == 2 && three_space) {
      auto cls = classify_quadric(q);
      cc.cls = cls.cls;
      cc.apex = cls.apex;
      if (i < sm.component_meta.size() && sm.component_meta[i].cone_apex)
        cc.apex = sm.component_meta[i].cone_apex;
    } else {
      throw std::invalid_argument(
          "lemma_suite: surface has a component without cataloged generators");
    }
    out.push_back(std::move(cc));
  }
  return out;
}

struct GeneratorSumReport {
  size_t component = 0;
  int degree = 0;
  int probes = 0;
  int contained_probes = 0;
  int max_sum = 0;
  int violations = 0;
};

struct NonconicalDegreeReport {
  bool applicable = false;
  long long bound = 0;  // 4 * deg f
  int max_line_degree = 0;
  int violations = 0;
  size_t pruned_points = 0;
  size_t surviving_points = 0;
};

struct Rich2Report {
  bool applicable = false;  // no plane or regulus components
  std::string excluded_reason;
  long long count = 0;
  long long bound = 0;  // n * D
  bool ok = false;
};

struct LemmaSuiteReport {
  std::vector<GeneratorSumReport> generator_sums;
  NonconicalDegreeReport nonconical_degree;
  Rich2Report rich2;
};

// Generator-sum, pruned non-conical degree, and 2-rich point checks on
// surfaces whose components have closed-form generator structure (planes, cones, cylinders,
// reguli via exact quadric classification).
inline LemmaSuiteReport lemma_suite(const Config& cfg, int probes = 100,
                                    std::uint64_t seed = 1) {
  if (!cfg.surface || cfg.surface->factors.empty())
    throw std::invalid_argument("lemma_suite: config has no factored surface");
  const SurfaceModel& sm = *cfg.surface;
  auto catalog = catalog_components(sm);
  LemmaSuiteReport rep;

  // ---- generator sums along probe lines, singly ruled components
  SplitMix64 rng(seed);
  for (size_t ci = 0; ci < catalog.size(); ++ci) {
    const auto& cc = catalog[ci];
    if (cc.plane || cc.cls == QuadricClass::REGULUS || cc.cls == QuadricClass::NO_REAL_LINES)
      continue;  // the generator-sum bound concerns singly ruled components
    const MultiPoly q = sm.factors[ci].with_vars({Var::x, Var::y, Var::z});
    GeneratorSumReport fr;
    fr.component = ci;
    fr.degree = q.degree();
    for (int probe = 0; probe < probes; ++probe) {
      AffPoint base{QVec{rng.rational(6, 3), rng.rational(6, 3), rng.rational(6, 3)}};
      QVec dir{rng.rational(6, 3), rng.rational(6, 3), rng.rational(6, 3)};
      if (qvec_is_zero(dir)) dir = {Rational(1), Rational(0), Rational(0)};
      ProjLine ell = make_line(base, dir);
      MultiPoly restricted = restrict_to_line(q, ell.base.c, ell.dir);
      int sum = 0;
      if (restricted.is_zero()) {
        // probe contained in the component: Lambda^* terms are all zero for
        // cones and cylinders (one generator per point, apex convention 0)
        ++fr.contained_probes;
        sum = 0;
      } else {
        UniPoly u = to_unipoly(restricted, Var::t);
        int roots = uni_degree(u) >= 1 ? count_distinct_real_roots(u) : 0;
        sum = roots;
        if (cc.apex && point_on_line(*cc.apex, ell) && sgn(q.eval(cc.apex->c)) == 0) {
          // apex is among the intersection points and contributes Lambda = 0
          Rational t0 = line_parameter(ell, *cc.apex);
          if (sgn(uni_eval(u, t0)) == 0) sum -= 1;
        }
      }
      fr.max_sum = std::max(fr.max_sum, sum);
      if (sum > fr.degree) ++fr.violations;
      ++fr.probes;
    }
    // contained probes from the config's own lines of this component
    int used = 0;
    for (const auto& ell : cfg.lines) {
      if (used >= probes) break;
      if (!vanishes_on_line(q, ell)) continue;
      ++fr.contained_probes;
      ++used;  // Lambda^* sum is 0 by the catalog structure; bound holds
    }
    rep.generator_sums.push_back(fr);
  }

  // ---- per-line non-conical degree after conical removal and <=3 pruning
  {
    bool has_plane = false;
    for (const auto& cc : catalog) has_plane = has_plane || cc.plane;
    if (!has_plane && !cfg.points.empty() && cfg.lines.size() >= 2) {
      rep.nonconical_degree.applicable = true;
      const int D = sm.f.degree();
      rep.nonconical_degree.bound = 4LL * D;
      // L0: lines contained in more than one component or in a non-ruled one
      std::vector<bool> in_l1(cfg.lines.size(), true);
      std::vector<std::vector<bool>> line_in(sm.factors.size(),
                                             std::vector<bool>(cfg.lines.size(), false));
      for (size_t f = 0; f < sm.factors.size(); ++f)
        for (size_t j = 0; j < cfg.lines.size(); ++j)
          line_in[f][j] = vanishes_on_line(sm.factors[f], cfg.lines[j]);
      for (size_t j = 0; j < cfg.lines.size(); ++j) {
        int containers = 0;
        bool ruled_container = false;
        for (size_t f = 0; f < sm.factors.size(); ++f)
          if (line_in[f][j]) {
            ++containers;
            if (catalog[f].cls != QuadricClass::NO_REAL_LINES) ruled_container = true;
          }
        if (containers != 1 || !ruled_container) in_l1[j] = false;
      }
      auto conical = [&](size_t pi, size_t lj) {
        for (size_t f = 0; f < sm.factors.size(); ++f)
          if (catalog[f].apex && *catalog[f].apex == cfg.points[pi] && line_in[f][lj]) return true;
        return false;
      };
      // non-conical degrees over L1
      std::vector<int> pdeg(cfg.points.size(), 0);
      std::vector<std::vector<size_t>> lines_at(cfg.points.size());
      for (size_t i = 0; i < cfg.points.size(); ++i)
        for (size_t j = 0; j < cfg.lines.size(); ++j) {
          if (!in_l1[j] || !point_on_line(cfg.points[i], cfg.lines[j])) continue;
          lines_at[i].push_back(j);
          if (!conical(i, j)) ++pdeg[i];
        }
      std::vector<bool> survives(cfg.points.size(), false);
      for (size_t i = 0; i < cfg.points.size(); ++i) survives[i] = pdeg[i] > 3;
      rep.nonconical_degree.surviving_points = static_cast<size_t>(
          std::count(survives.begin(), survives.end(), true));
      rep.nonconical_degree.pruned_points = cfg.points.size() - rep.nonconical_degree.surviving_points;
      for (size_t j = 0; j < cfg.lines.size(); ++j) {
        if (!in_l1[j]) continue;
        std::set<size_t> neighbors;
        for (size_t i = 0; i < cfg.points.size(); ++i) {
          if (!survives[i] || !point_on_line(cfg.points[i], cfg.lines[j])) continue;
          for (size_t j2 : lines_at[i])
            if (j2 != j && !conical(i, j2)) neighbors.insert(j2);
        }
        int deg = static_cast<int>(neighbors.size());
        rep.nonconical_degree.max_line_degree = std::max(rep.nonconical_degree.max_line_degree, deg);
        if (deg > rep.nonconical_degree.bound) ++rep.nonconical_degree.violations;
      }
    }
  }

  // ---- 2-rich points bounded by n*D on plane/regulus-free surfaces
  {
    std::string excluded;
    for (const auto& cc : catalog) {
      if (cc.plane) excluded = "plane component present";
      if (cc.cls == QuadricClass::REGULUS) excluded = "regulus component present";
    }
    if (!excluded.empty()) {
      rep.rich2.applicable = false;
      rep.rich2.excluded_reason = excluded;
    } else {
      rep.rich2.applicable = true;
      rep.rich2.count = cfg.lines.size() >= 2
                            ? static_cast<long long>(rich_points(cfg, 2).size())
                            : 0;
      rep.rich2.bound = static_cast<long long>(cfg.lines.size()) * sm.f.degree();
      rep.rich2.ok = rep.rich2.count <= rep.rich2.bound;
    }
  }
  return rep;
}

}  // namespace incgeo
