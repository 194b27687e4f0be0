#pragma once

#include <algorithm>
#include <chrono>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "incgeo/incidence.hpp"
#include "incgeo/poly_io.hpp"

namespace incgeo {

enum class Family {
  REGULUS_GRID,
  PARABOLIC_CYLINDER,
  CONE_PYTHAGOREAN,
  PLANE_GRID_ELEKES,
  PRODUCT_SURFACE,
  VARIETY_4D_XYZ,
};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::REGULUS_GRID: return "regulus-grid";
    case Family::PARABOLIC_CYLINDER: return "parabolic-cylinder";
    case Family::CONE_PYTHAGOREAN: return "cone-pythagorean";
    case Family::PLANE_GRID_ELEKES: return "plane-grid-elekes";
    case Family::PRODUCT_SURFACE: return "product-surface";
    case Family::VARIETY_4D_XYZ: return "variety-4d-xyz";
  }
  return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::REGULUS_GRID, Family::PARABOLIC_CYLINDER, Family::CONE_PYTHAGOREAN,
                   Family::PLANE_GRID_ELEKES, Family::PRODUCT_SURFACE, Family::VARIETY_4D_XYZ})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

struct GeneratorSpec {
  Family family = Family::REGULUS_GRID;
  long g = 4;   // grid size (regulus grid, 4d variety)
  long n = 8;   // number of lines (cylinder, cone, product)
  long m = 16;  // number of sampled points (cylinder, cone, product)
  long a = 2;   // Elekes grid parameters
  long b = 2;
  std::uint64_t seed = 1;

  // ground truths where the construction pins them
  std::optional<long long> expected_m, expected_n, expected_I;
};

namespace detail {

// primitive Pythagorean direction triples (k^2-l^2, 2kl, k^2+l^2),
// k > l >= 1, coprime, opposite parity; ascending enumeration.
inline std::vector<std::array<long, 3>> pythagorean_directions(size_t count) {
  std::vector<std::array<long, 3>> out;
  for (long k = 2; out.size() < count; ++k)
    for (long l = 1; l < k && out.size() < count; ++l) {
      if ((k + l) % 2 == 0) continue;
      if (std::gcd(k, l) != 1) continue;
      out.push_back({k * k - l * l, 2 * k * l, k * k + l * l});
    }
  return out;
}

inline void add_point(Config& cfg, std::set<AffPoint>& seen, AffPoint p) {
  if (seen.insert(p).second) cfg.points.push_back(std::move(p));
}

}  // namespace detail

inline Config gen(const GeneratorSpec& spec_in) {
  GeneratorSpec spec = spec_in;
  if (spec.n < 0 || spec.n > 5000 || spec.m < 0 || spec.m > 100000)
    throw std::invalid_argument("gen: line/point counts out of range");
  Config cfg;
  std::set<AffPoint> seen;
  SplitMix64 rng(spec.seed);

  switch (spec.family) {
    case Family::REGULUS_GRID: {
      // rulings {x=a}, {y=b} of z = xy; points are the pairwise crossings
      const long g = spec.g;
      if (g < 1 || g > 4096) throw std::invalid_argument("gen: regulus-grid size out of range");
      cfg.ambient_dim = 3;
      for (long a = 0; a < g; ++a) {
        ProjLine ell = make_line(AffPoint{{Rational(a), Rational(0), Rational(0)}},
                                 {Rational(0), Rational(1), Rational(a)});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      for (long b = 0; b < g; ++b) {
        ProjLine ell = make_line(AffPoint{{Rational(0), Rational(b), Rational(0)}},
                                 {Rational(1), Rational(0), Rational(b)});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      for (long a = 0; a < g; ++a)
        for (long b = 0; b < g; ++b)
          detail::add_point(cfg, seen, AffPoint{{Rational(a), Rational(b), Rational(a * b)}});
      SurfaceModel sm;
      sm.f = parse_poly("z - x*y").with_vars({Var::x, Var::y, Var::z});
      sm.factors = {sm.f};
      sm.component_meta = {{false, std::nullopt, true}};
      cfg.surface = std::move(sm);
      spec.expected_m = g * g;
      spec.expected_n = 2 * g;
      spec.expected_I = 2 * g * g;
      break;
    }
    case Family::PARABOLIC_CYLINDER: {
      const long n = spec.n, m = spec.m;
      cfg.ambient_dim = 3;
      for (long a = 0; a < n; ++a) {
        ProjLine ell = make_line(AffPoint{{Rational(a), Rational(a * a), Rational(0)}},
                                 {Rational(0), Rational(0), Rational(1)});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      long made = 0;
      while (made < m) {
        long a = spec.n > 0 ? static_cast<long>(rng.below(static_cast<std::uint64_t>(n))) : 0;
        Rational t = rng.rational(9, 4);
        AffPoint p{{Rational(a), Rational(a * a), t}};
        if (seen.insert(p).second) {
          cfg.points.push_back(p);
          ++made;
        }
      }
      SurfaceModel sm;
      sm.f = parse_poly("y - x^2").with_vars({Var::x, Var::y, Var::z});
      sm.factors = {sm.f};
      sm.component_meta = {{false, std::nullopt, false}};
      cfg.surface = std::move(sm);
      break;
    }
    case Family::CONE_PYTHAGOREAN: {
      const long n = spec.n, m = spec.m;
      cfg.ambient_dim = 3;
      auto dirs = detail::pythagorean_directions(static_cast<size_t>(n));
      for (const auto& d : dirs) {
        ProjLine ell = make_line(AffPoint{{Rational(0), Rational(0), Rational(0)}},
                                 {Rational(d[0]), Rational(d[1]), Rational(d[2])});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      detail::add_point(cfg, seen, AffPoint{{Rational(0), Rational(0), Rational(0)}});  // apex
      long made = 1;
      size_t which = 0;
      long tick = 1;
      while (made < m) {
        const auto& d = dirs[which];
        Rational t(tick);
        AffPoint p{{t * Rational(d[0]), t * Rational(d[1]), t * Rational(d[2])}};
        if (seen.insert(p).second) {
          cfg.points.push_back(p);
          ++made;
        }
        which = (which + 1) % dirs.size();
        if (which == 0) ++tick;
      }
      SurfaceModel sm;
      sm.f = parse_poly("x^2 + y^2 - z^2").with_vars({Var::x, Var::y, Var::z});
      sm.factors = {sm.f};
      ComponentMeta cm;
      cm.cone_apex = AffPoint{{Rational(0), Rational(0), Rational(0)}};
      sm.component_meta = {cm};
      cfg.surface = std::move(sm);
      break;
    }
    case Family::PLANE_GRID_ELEKES: {
      // points {1..a} x {1..2ab}; lines y = cx + d, c in 1..b, d in 1..ab
      const long a = spec.a, b = spec.b;
      if (a < 1 || b < 1) throw std::invalid_argument("gen: elekes parameters must be positive");
      if (a * a * b > 200000) throw std::invalid_argument("gen: elekes size overflow guard");
      cfg.ambient_dim = 2;
      for (long x = 1; x <= a; ++x)
        for (long y = 1; y <= 2 * a * b; ++y)
          detail::add_point(cfg, seen, AffPoint{{Rational(x), Rational(y)}});
      for (long c = 1; c <= b; ++c)
        for (long d = 1; d <= a * b; ++d)
          cfg.lines.push_back(make_line(AffPoint{{Rational(0), Rational(d)}},
                                        {Rational(1), Rational(c)}));
      spec.expected_m = 2 * a * a * b;
      spec.expected_n = a * b * b;
      spec.expected_I = a * a * b * b;  // each line meets the grid in exactly a points
      break;
    }
    case Family::PRODUCT_SURFACE: {
      // cylinder (y = x^2) union cone (x^2 + y^2 = z^2), degree 4 total
      const long n = std::max(spec.n, 8L), m = spec.m;
      cfg.ambient_dim = 3;
      long n_cyl = n / 2, n_cone = n - n_cyl;
      // integer rulings plus the two Pythagorean rulings that cross the cone
      std::vector<Rational> ruling_a;
      for (long a = 0; static_cast<long>(ruling_a.size()) < n_cyl - 2; ++a)
        ruling_a.push_back(Rational(a));
      ruling_a.push_back(rat(3, 4));
      ruling_a.push_back(rat(4, 3));
      for (const Rational& a : ruling_a) {
        ProjLine ell = make_line(AffPoint{{a, a * a, Rational(0)}},
                                 {Rational(0), Rational(0), Rational(1)});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      // cone lines: the crossing directions first, then primitive triples
      std::vector<std::array<long, 3>> cone_dirs = {{4, 3, 5}, {3, 4, 5}, {4, 3, -5}, {3, 4, -5}};
      for (const auto& d : detail::pythagorean_directions(static_cast<size_t>(n_cone) + 4)) {
        if (static_cast<long>(cone_dirs.size()) >= n_cone) break;
        if (std::find(cone_dirs.begin(), cone_dirs.end(), d) == cone_dirs.end())
          cone_dirs.push_back(d);
      }
      for (const auto& d : cone_dirs) {
        ProjLine ell = make_line(AffPoint{{Rational(0), Rational(0), Rational(0)}},
                                 {Rational(d[0]), Rational(d[1]), Rational(d[2])});
        ell.contained = true;
        cfg.lines.push_back(ell);
      }
      // crossing points cylinder-cone (on one ruling and one cone line each)
      detail::add_point(cfg, seen, AffPoint{{rat(3, 4), rat(9, 16), rat(15, 16)}});
      detail::add_point(cfg, seen, AffPoint{{rat(3, 4), rat(9, 16), rat(-15, 16)}});
      detail::add_point(cfg, seen, AffPoint{{rat(4, 3), rat(16, 9), rat(20, 9)}});
      detail::add_point(cfg, seen, AffPoint{{rat(4, 3), rat(16, 9), rat(-20, 9)}});
      detail::add_point(cfg, seen, AffPoint{{Rational(0), Rational(0), Rational(0)}});  // apex
      long made = static_cast<long>(cfg.points.size());
      size_t li = 0;
      long tick = 1;
      while (made < m) {
        const ProjLine& ell = cfg.lines[li];
        AffPoint p = point_at(ell, Rational(tick));
        if (seen.insert(p).second) {
          cfg.points.push_back(p);
          ++made;
        }
        li = (li + 1) % cfg.lines.size();
        if (li == 0) ++tick;
      }
      SurfaceModel sm;
      MultiPoly cyl = parse_poly("y - x^2").with_vars({Var::x, Var::y, Var::z});
      MultiPoly cone = parse_poly("x^2 + y^2 - z^2").with_vars({Var::x, Var::y, Var::z});
      sm.f = (cyl * cone).with_vars({Var::x, Var::y, Var::z});
      sm.factors = {cyl, cone};
      ComponentMeta cyl_meta;
      ComponentMeta cone_meta;
      cone_meta.cone_apex = AffPoint{{Rational(0), Rational(0), Rational(0)}};
      sm.component_meta = {cyl_meta, cone_meta};
      cfg.surface = std::move(sm);
      break;
    }
    case Family::VARIETY_4D_XYZ: {
      // points (a,b,c,abc) and the three axis-parallel line families on
      // Z(w - xyz); m = g^3, n = 3g^2, I = 3g^3
      const long g = spec.g;
      if (g < 1 || g > 64) throw std::invalid_argument("gen: 4d grid size out of range");
      cfg.ambient_dim = 4;
      for (long a = 0; a < g; ++a)
        for (long b = 0; b < g; ++b)
          for (long c = 0; c < g; ++c)
            detail::add_point(cfg, seen,
                              AffPoint{{Rational(a), Rational(b), Rational(c), Rational(a * b * c)}});
      auto add_line = [&](AffPoint base, QVec dir) {
        ProjLine ell = make_line(std::move(base), std::move(dir));
        ell.contained = true;
        cfg.lines.push_back(ell);
      };
      for (long b = 0; b < g; ++b)
        for (long c = 0; c < g; ++c)
          add_line(AffPoint{{Rational(0), Rational(b), Rational(c), Rational(0)}},
                   {Rational(1), Rational(0), Rational(0), Rational(b * c)});
      for (long a = 0; a < g; ++a)
        for (long c = 0; c < g; ++c)
          add_line(AffPoint{{Rational(a), Rational(0), Rational(c), Rational(0)}},
                   {Rational(0), Rational(1), Rational(0), Rational(a * c)});
      for (long a = 0; a < g; ++a)
        for (long b = 0; b < g; ++b)
          add_line(AffPoint{{Rational(a), Rational(b), Rational(0), Rational(0)}},
                   {Rational(0), Rational(0), Rational(1), Rational(a * b)});
      SurfaceModel sm;
      sm.f = parse_poly("w - x*y*z").with_vars({Var::x, Var::y, Var::z, Var::w});
      sm.factors = {sm.f};
      sm.component_meta = {{false, std::nullopt, std::nullopt}};
      cfg.surface = std::move(sm);
      spec.expected_m = g * g * g;
      spec.expected_n = 3 * g * g;
      spec.expected_I = 3 * g * g * g;
      break;
    }
  }

  cfg.validate();
  if (cfg.surface) {
    for (const auto& p : cfg.points)
      if (sgn(cfg.surface->f.eval(p.c)) != 0)
        throw std::logic_error("gen: a generated point is off the family surface");
    for (const auto& ell : cfg.lines)
      if (ell.contained && !vanishes_on_line(cfg.surface->f, ell))
        throw std::logic_error("gen: a generated line is off the family surface");
  }
  if (spec.expected_m && *spec.expected_m != static_cast<long long>(cfg.points.size()))
    throw std::logic_error("gen: point-count ground truth mismatch");
  if (spec.expected_n && *spec.expected_n != static_cast<long long>(cfg.lines.size()))
    throw std::logic_error("gen: line-count ground truth mismatch");
  if (spec.expected_I && *spec.expected_I != count_incidences(cfg))
    throw std::logic_error("gen: incidence ground truth mismatch");
  return cfg;
}

inline std::optional<long long> expected_incidences(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::REGULUS_GRID: return 2 * spec.g * spec.g;
    case Family::VARIETY_4D_XYZ: return 3 * spec.g * spec.g * spec.g;
    case Family::PLANE_GRID_ELEKES: return spec.a * spec.a * spec.b * spec.b;
    default: return std::nullopt;
  }
}

// --- experiments -----------------------------------------------------------

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentResult {
  GeneratorSpec spec;
  IncidenceReport report;
  std::optional<LemmaSuiteReport> lemma;
  std::vector<CheckOutcome> checks;
  double wall_seconds = 0.0;  // reported on stderr, never serialized
};

inline ExperimentResult run_experiment(const GeneratorSpec& spec,
                                       const std::vector<std::string>& checks,
                                       BoundName bound = BoundName::TH13A,
                                       const Rational& C = Rational(10)) {
  auto t0 = std::chrono::steady_clock::now();
  ExperimentResult out;
  out.spec = spec;
  Config cfg = gen(spec);

  bool want_lemma = false, want_bounds = false;
  for (const auto& c : checks) {
    if (c == "lemma") want_lemma = true;
    if (c == "bounds") want_bounds = true;
  }

  std::vector<std::pair<BoundName, Rational>> reqs;
  if (want_bounds) reqs.emplace_back(bound, C);
  out.report = incidence_report(cfg, reqs);

  if (auto expect = expected_incidences(spec)) {
    CheckOutcome ok;
    ok.name = "ground-truth-incidences";
    ok.passed = *expect == out.report.I;
    ok.detail = "expected " + std::to_string(*expect) + ", counted " + std::to_string(out.report.I);
    out.checks.push_back(ok);
  }
  if (want_bounds) {
    for (const auto& row : out.report.bounds) {
      CheckOutcome ok;
      ok.name = std::string("bound-") + to_string(row.name);
      ok.passed = row.holds;
      ok.detail = "I=" + std::to_string(out.report.I) + " ratio=" + row.ratio;
      out.checks.push_back(ok);
    }
  }
  if (want_lemma) {
    if (cfg.surface && !cfg.surface->factors.empty() && cfg.ambient_dim == 3) {
      out.lemma = lemma_suite(cfg, 100, spec.seed);
      CheckOutcome ff;
      ff.name = "generator-sum-bound";
      ff.passed = true;
      int maxsum = 0;
      for (const auto& fr : out.lemma->generator_sums) {
        if (fr.violations > 0) ff.passed = false;
        maxsum = std::max(maxsum, fr.max_sum);
      }
      ff.detail = "max generator sum " + std::to_string(maxsum);
      out.checks.push_back(ff);
      if (out.lemma->nonconical_degree.applicable) {
        CheckOutcome c4;
        c4.name = "nonconical-degree-bound";
        c4.passed = out.lemma->nonconical_degree.violations == 0;
        c4.detail = "max " + std::to_string(out.lemma->nonconical_degree.max_line_degree) + " of bound " +
                    std::to_string(out.lemma->nonconical_degree.bound);
        out.checks.push_back(c4);
      }
      CheckOutcome r2;
      r2.name = "two-rich-bound";
      if (out.lemma->rich2.applicable) {
        r2.passed = out.lemma->rich2.ok;
        r2.detail = std::to_string(out.lemma->rich2.count) + " <= " +
                    std::to_string(out.lemma->rich2.bound);
      } else {
        r2.passed = true;
        r2.detail = "excluded: " + out.lemma->rich2.excluded_reason;
      }
      out.checks.push_back(r2);
    } else {
      CheckOutcome skip;
      skip.name = "lemma-suite";
      skip.passed = true;
      skip.detail = "skipped: no cataloged 3-space surface";
      out.checks.push_back(skip);
    }
  }
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// --- scaling -----------------------------------------------------------------

struct ScaleRow {
  std::string family;
  long size = 0;
  long long m = 0, n = 0;
  int D = 0, s = 0;
  long long I = 0;
  std::string bound;  // decimal
  std::string ratio;  // decimal
  Rational ratio_exact;
};

struct ScalingReport {
  std::vector<ScaleRow> rows;
  std::string trend;  // non-decreasing | non-increasing | mixed | constant
};

inline ScalingReport scaling_report(Family family, const std::vector<long>& sizes,
                                    BoundName bound, const Rational& C = Rational(10),
                                    std::uint64_t seed = 1) {
  if (sizes.size() < 3) throw std::invalid_argument("scaling_report: need at least 3 sizes");
  ScalingReport rep;
  for (long size : sizes) {
    GeneratorSpec spec;
    spec.family = family;
    spec.seed = seed;
    switch (family) {
      case Family::REGULUS_GRID:
      case Family::VARIETY_4D_XYZ: spec.g = size; break;
      case Family::PLANE_GRID_ELEKES: spec.a = spec.b = size; break;
      default:
        spec.n = size;
        spec.m = 2 * size;
        break;
    }
    Config cfg = gen(spec);
    ScaleRow row;
    row.family = to_string(family);
    row.size = size;
    row.m = static_cast<long long>(cfg.points.size());
    row.n = static_cast<long long>(cfg.lines.size());
    row.D = cfg.surface ? cfg.surface->f.degree() : 0;
    row.s = max_coplanar_s(cfg);
    row.I = count_incidences(cfg);
    BoundParams prm;
    prm.m = Integer(static_cast<long>(row.m));
    prm.n = Integer(static_cast<long>(row.n));
    prm.D = Integer(row.D);
    prm.s = Integer(static_cast<long>(row.s));
    prm.q = Integer(static_cast<long>(row.n));
    QInterval v = bound_eval(bound, prm, C);
    Rational mid = (v.lo + v.hi) / 2;
    row.bound = decimal_string(mid, 6);
    row.ratio_exact = sgn(mid) == 0 ? Rational(0) : Rational(static_cast<long>(row.I)) / mid;
    row.ratio = decimal_string(row.ratio_exact, 6);
    rep.rows.push_back(std::move(row));
  }
  bool nondec = true, noninc = true;
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].ratio_exact < rep.rows[i - 1].ratio_exact) nondec = false;
    if (rep.rows[i].ratio_exact > rep.rows[i - 1].ratio_exact) noninc = false;
  }
  rep.trend = (nondec && noninc) ? "constant" : nondec ? "non-decreasing" : noninc ? "non-increasing" : "mixed";
  return rep;
}

inline std::string scaling_csv(const ScalingReport& rep) {
  std::ostringstream os;
  os << "family,size,m,n,D,s,I,bound,ratio\n";
  for (const auto& r : rep.rows)
    os << r.family << "," << r.size << "," << r.m << "," << r.n << "," << r.D << "," << r.s << ","
       << r.I << "," << r.bound << "," << r.ratio << "\n";
  os << "# trend: " << rep.trend << "\n";
  return os.str();
}

}  // namespace incgeo
