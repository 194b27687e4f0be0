// Acceptance suite: one pass/fail line per criterion, exact oracles
// throughout, no tolerances anywhere an exact check is stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "incgeo/flecnode.hpp"
#include "incgeo/json_io.hpp"
#include "incgeo/lab.hpp"
#include "incgeo/projection.hpp"
#include "incgeo/surfaces.hpp"

using namespace incgeo;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %2d: %s (%s; %.2f s)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int criterion, const std::string& what, const std::function<bool(std::string&)>& body,
         double time_limit_s = 0.0) {
  auto t0 = Clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (ok && time_limit_s > 0.0 && seconds > time_limit_s) {
    ok = false;
    detail += "; exceeded the " + std::to_string(time_limit_s) + " s runtime limit";
  }
  report(criterion, what, ok, detail, seconds);
}

ProjLine cylinder_ruling(long num, long den = 1) {
  Rational a = rat(num, den);
  return make_line(AffPoint{{a, a * a, Rational(0)}}, {Rational(0), Rational(0), Rational(1)});
}

std::vector<ProjLine> cone_lines(size_t count) {
  std::vector<ProjLine> out;
  long k = 2, l = 1;
  while (out.size() < count) {
    if (l < k && std::gcd(k, l) == 1 && (k + l) % 2 == 1)
      out.push_back(make_line(AffPoint{{Rational(0), Rational(0), Rational(0)}},
                              {Rational(k * k - l * l), Rational(2 * k * l),
                               Rational(k * k + l * l)}));
    ++l;
    if (l >= k) {
      ++k;
      l = 1;
    }
  }
  return out;
}

std::vector<ProjLine> hyperboloid_rulings(size_t count) {
  // rational circle points (p,q) via the tangent-half-angle map; two rulings each
  std::vector<ProjLine> out;
  for (long u = 0; out.size() < count; ++u) {
    Rational den(u * u + 1);
    Rational p = Rational(1 - u * u) / den;
    Rational q = Rational(2 * u) / den;
    out.push_back(make_line(AffPoint{{p, q, Rational(0)}}, {-q, p, Rational(1)}));
    if (out.size() < count)
      out.push_back(make_line(AffPoint{{p, q, Rational(0)}}, {q, -p, Rational(1)}));
  }
  return out;
}

}  // namespace

int main() {
  auto suite_start = Clock::now();

  run(1, "flecnode polynomial vanishes identically on quadrics", [](std::string& detail) {
    const std::vector<std::string> quadrics = {"x^2 + y^2 + z^2 - 1", "z - x*y", "y - x^2",
                                               "x^2 + y^2 - z^2", "x^2 + y^2 - z^2 - 1"};
    for (const auto& s : quadrics) {
      FlecnodeResult r = flecnode_poly(parse_poly(s));
      if (!r.is_zero() || !r.fl().is_zero()) {
        detail = "nonzero flecnode polynomial for " + s;
        return false;
      }
    }
    detail = "5 quadrics, all identically zero";
    return true;
  }, 10.0);

  run(2, "flecnode polynomial vanishes on cataloged contained lines", [](std::string& detail) {
    struct Entry {
      std::string name;
      MultiPoly f;
      std::vector<ProjLine> lines;
    };
    std::vector<Entry> entries;
    {
      Entry e{"z - x*y", parse_poly("z - x*y"), {}};
      for (long a = 0; a < 50; ++a) {
        e.lines.push_back(make_line(AffPoint{{Rational(a), Rational(0), Rational(0)}},
                                    {Rational(0), Rational(1), Rational(a)}));
        e.lines.push_back(make_line(AffPoint{{Rational(0), Rational(a), Rational(0)}},
                                    {Rational(1), Rational(0), Rational(a)}));
      }
      entries.push_back(std::move(e));
    }
    {
      Entry e{"y - x^2", parse_poly("y - x^2"), {}};
      for (long a = -50; a < 50; ++a) e.lines.push_back(cylinder_ruling(a));
      entries.push_back(std::move(e));
    }
    {
      Entry e{"x^2 + y^2 - z^2", parse_poly("x^2 + y^2 - z^2"), cone_lines(100)};
      entries.push_back(std::move(e));
    }
    {
      Entry e{"x^2 + y^2 - z^2 - 1", parse_poly("x^2 + y^2 - z^2 - 1"), hyperboloid_rulings(100)};
      entries.push_back(std::move(e));
    }
    {
      MultiPoly quartic =
          (parse_poly("y - x^2") * parse_poly("x^2 + y^2 - z^2")).with_vars({Var::x, Var::y, Var::z});
      Entry e{"(y - x^2)(x^2 + y^2 - z^2)", quartic, {}};
      for (long a = -24; a <= 25; ++a) e.lines.push_back(cylinder_ruling(a));
      for (const auto& ell : cone_lines(50)) e.lines.push_back(ell);
      entries.push_back(std::move(e));
    }
    long total = 0;
    for (const auto& e : entries) {
      FlecnodeResult fl = flecnode_poly(e.f.with_vars({Var::x, Var::y, Var::z}));
      size_t cataloged = 0;
      for (const auto& ell : e.lines) {
        if (!vanishes_on_line(e.f.with_vars({Var::x, Var::y, Var::z}), ell)) {
          detail = "a cataloged line is not on " + e.name;
          return false;
        }
        ++cataloged;
        if (!fl.vanishes_on(ell)) {
          detail = "flecnode polynomial misses a contained line of " + e.name;
          return false;
        }
      }
      if (cataloged < 100) {
        detail = "fewer than 100 lines cataloged for " + e.name;
        return false;
      }
      total += static_cast<long>(cataloged);
    }
    detail = std::to_string(entries.size()) + " surfaces, " + std::to_string(total) +
             " contained lines, zero misses";
    return true;
  }, 120.0);

  run(3, "Cayley-Salmon negative certificate for the Fermat cubic", [](std::string& detail) {
    MultiPoly cubic = parse_poly("x^3 + y^3 + z^3 - 1");
    auto verdicts = cayley_salmon_test(cubic, {cubic});
    if (verdicts.size() != 1 || verdicts[0].verdict != RuledVerdict::NOT_RULED) {
      detail = "expected NOT_RULED";
      return false;
    }
    if (!verdicts[0].certificate) {
      detail = "missing certificate point";
      return false;
    }
    const AffPoint& p = *verdicts[0].certificate;
    if (sgn(cubic.eval(p.c)) != 0) {
      detail = "certificate point is off Z(f)";
      return false;
    }
    FlecnodeResult fl = flecnode_poly(cubic);
    if (sgn(fl.eval(p)) == 0) {
      detail = "flecnode polynomial vanishes at the certificate";
      return false;
    }
    std::ostringstream os;
    os << "certificate (" << to_string(p.c[0]) << ", " << to_string(p.c[1]) << ", "
       << to_string(p.c[2]) << "), fl(p) != 0 re-verified";
    detail = os.str();
    return true;
  });

  run(4, "Klein quadric and line-plane formula on 1000 random cases", [](std::string& detail) {
    SplitMix64 rng(20260810);
    int klein = 0;
    while (klein < 1000) {
      AffPoint a{{rng.rational(25, 9), rng.rational(25, 9), rng.rational(25, 9)}};
      AffPoint b{{rng.rational(25, 9), rng.rational(25, 9), rng.rational(25, 9)}};
      if (a == b) continue;
      ProjLine ell = line_from_points(a, b);
      if (sgn(klein_form(*ell.plucker)) != 0) {
        detail = "Klein form nonzero";
        return false;
      }
      ++klein;
    }
    int planes = 0;
    while (planes < 1000) {
      AffPoint base{{rng.rational(9, 4), rng.rational(9, 4), rng.rational(9, 4)}};
      QVec dir = {rng.rational(6, 3), rng.rational(6, 3), rng.rational(6, 3)};
      if (qvec_is_zero(dir)) continue;
      QVec coeffs = {rng.rational(6, 3), rng.rational(6, 3), rng.rational(6, 3),
                     rng.rational(6, 3)};
      if (sgn(coeffs[1]) == 0 && sgn(coeffs[2]) == 0 && sgn(coeffs[3]) == 0) continue;
      // line_plane_intersection cross-validates the formula against the
      // parametric solve internally and throws on any disagreement
      line_plane_intersection(make_line(base, dir), make_hyperplane(coeffs));
      ++planes;
    }
    detail = "1000 Klein identities and 1000 formula cross-checks, all exact";
    return true;
  });

  run(5, "generator sums along probe lines on cylinder and cone", [](std::string& detail) {
    int max_sum = 0;
    for (Family fam : {Family::PARABOLIC_CYLINDER, Family::CONE_PYTHAGOREAN}) {
      GeneratorSpec spec;
      spec.family = fam;
      spec.n = 20;
      spec.m = 30;
      spec.seed = 11;
      Config cfg = gen(spec);
      auto rep = lemma_suite(cfg, 100, 11);
      for (const auto& fr : rep.generator_sums) {
        if (fr.probes < 100) {
          detail = "fewer than 100 probes";
          return false;
        }
        if (fr.violations != 0 || fr.max_sum > 2) {
          detail = std::string("violation on ") + to_string(fam);
          return false;
        }
        max_sum = std::max(max_sum, fr.max_sum);
      }
    }
    detail = "100 probes per surface, all sums <= 2 (max " + std::to_string(max_sum) +
             "), apex convention applied";
    return true;
  });

  run(6, "pruned non-conical line degrees on the product surface", [](std::string& detail) {
    GeneratorSpec spec;
    spec.family = Family::PRODUCT_SURFACE;
    spec.n = 16;
    spec.m = 48;
    spec.seed = 3;
    Config cfg = gen(spec);
    if (cfg.surface->f.degree() != 4) {
      detail = "unexpected surface degree";
      return false;
    }
    auto rep = lemma_suite(cfg, 50, 3);
    if (!rep.nonconical_degree.applicable) {
      detail = "check not applicable";
      return false;
    }
    if (rep.nonconical_degree.bound != 16 || rep.nonconical_degree.violations != 0) {
      detail = "violations present";
      return false;
    }
    detail = "max non-conical line degree " + std::to_string(rep.nonconical_degree.max_line_degree) +
             " <= 16, zero violations";
    return true;
  });

  run(7, "2-rich bound on the cone; regulus grid excluded", [](std::string& detail) {
    GeneratorSpec spec;
    spec.family = Family::CONE_PYTHAGOREAN;
    spec.n = 100;
    spec.m = 120;
    Config cone = gen(spec);
    auto rep = lemma_suite(cone, 10, 1);
    if (!rep.rich2.applicable || !rep.rich2.ok) {
      detail = "cone check failed";
      return false;
    }
    GeneratorSpec rg;
    rg.family = Family::REGULUS_GRID;
    rg.g = 4;
    auto rep2 = lemma_suite(gen(rg), 10, 1);
    if (rep2.rich2.applicable) {
      detail = "regulus config was not excluded";
      return false;
    }
    detail = std::to_string(rep.rich2.count) + " <= " + std::to_string(rep.rich2.bound) +
             " on the cone; regulus grid excluded (" + rep2.rich2.excluded_reason + ")";
    return true;
  });

  run(8, "regulus reconstruction from three rulings of z = xy", [](std::string& detail) {
    auto ruling = [](long a) {
      return make_line(AffPoint{{Rational(a), Rational(0), Rational(0)}},
                       {Rational(0), Rational(1), Rational(a)});
    };
    MultiPoly expect = parse_poly("z - x*y").monic();
    const ProjLine l0 = ruling(0), l1 = ruling(1), l2 = ruling(2);
    const ProjLine* perms[6][3] = {{&l0, &l1, &l2}, {&l0, &l2, &l1}, {&l1, &l0, &l2},
                                   {&l1, &l2, &l0}, {&l2, &l0, &l1}, {&l2, &l1, &l0}};
    for (auto& perm : perms) {
      MultiPoly q = regulus_through(*perm[0], *perm[1], *perm[2]);
      if (q != expect) {
        detail = "reconstruction differs from z - xy in canonical form";
        return false;
      }
    }
    detail = "canonical equality for all 6 input permutations";
    return true;
  });

  run(9, "derivative-chain claim on cone and product configs", [](std::string& detail) {
    long checked = 0;
    for (Family fam : {Family::CONE_PYTHAGOREAN, Family::PRODUCT_SURFACE}) {
      GeneratorSpec spec;
      spec.family = fam;
      spec.n = 14;
      spec.m = 36;
      Config cfg = gen(spec);
      for (Var v : {Var::x, Var::y}) {
        auto assignment = derivative_chain_assign(cfg.surface->f, cfg, v);
        if (!assignment.claim_violations.empty()) {
          detail = assignment.claim_violations.front();
          return false;
        }
        checked += static_cast<long>(cfg.points.size() * cfg.lines.size());
      }
    }
    detail = "k >= j holds exhaustively over " + std::to_string(checked) + " point-line pairs";
    return true;
  });

  run(10, "explicit-constant bound inequalities at C = 10", [](std::string& detail) {
    // TH13A on the regulus grid, D=2, s=2, I = 2g^2 exactly
    for (long gsize : {4L, 8L, 16L, 32L}) {
      GeneratorSpec spec;
      spec.family = Family::REGULUS_GRID;
      spec.g = gsize;
      Config cfg = gen(spec);  // gen rechecks I == 2 g^2
      int s = max_coplanar_s(cfg);
      if (s != 2) {
        detail = "regulus grid s != 2";
        return false;
      }
      BoundParams prm;
      prm.m = Integer(static_cast<long>(cfg.points.size()));
      prm.n = Integer(static_cast<long>(cfg.lines.size()));
      prm.D = Integer(2);
      prm.s = Integer(s);
      if (!bound_holds(count_incidences(cfg), BoundName::TH13A, prm, Rational(10))) {
        detail = "TH13A violated on regulus grid g=" + std::to_string(gsize);
        return false;
      }
    }
    // TH14A on the 4d variety, D=3, s computed exactly, I = 3g^3 exactly
    for (long gsize = 2; gsize <= 6; ++gsize) {
      GeneratorSpec spec;
      spec.family = Family::VARIETY_4D_XYZ;
      spec.g = gsize;
      Config cfg = gen(spec);  // gen rechecks I == 3 g^3
      BoundParams prm;
      prm.m = Integer(static_cast<long>(cfg.points.size()));
      prm.n = Integer(static_cast<long>(cfg.lines.size()));
      prm.D = Integer(3);
      prm.s = Integer(max_coplanar_s(cfg));
      if (!bound_holds(count_incidences(cfg), BoundName::TH14A, prm, Rational(10))) {
        detail = "TH14A violated on 4d variety g=" + std::to_string(gsize);
        return false;
      }
    }
    // CORMAINX on small Elekes grids
    for (long size : {2L, 3L, 4L}) {
      GeneratorSpec spec;
      spec.family = Family::PLANE_GRID_ELEKES;
      spec.a = spec.b = size;
      Config cfg = gen(spec);
      BoundParams prm;
      prm.m = Integer(static_cast<long>(cfg.points.size()));
      prm.n = Integer(static_cast<long>(cfg.lines.size()));
      prm.s = Integer(max_coplanar_s(cfg));
      if (!bound_holds(count_incidences(cfg), BoundName::CORMAINX, prm, Rational(10))) {
        detail = "CORMAINX violated on Elekes a=b=" + std::to_string(size);
        return false;
      }
    }
    // trend CSV across all three families, ratios included
    auto t1 = scaling_report(Family::REGULUS_GRID, {4, 8, 16, 32}, BoundName::TH13A, Rational(10));
    auto t2 = scaling_report(Family::VARIETY_4D_XYZ, {2, 3, 4, 5, 6}, BoundName::TH14A,
                             Rational(10));
    auto t3 = scaling_report(Family::PLANE_GRID_ELEKES, {2, 3, 4}, BoundName::CORMAINX,
                             Rational(10));
    std::ostringstream csv;
    csv << "family,size,m,n,D,s,I,bound,ratio\n";
    for (const auto* rep : {&t1, &t2, &t3}) {
      for (const auto& r : rep->rows)
        csv << r.family << "," << r.size << "," << r.m << "," << r.n << "," << r.D << "," << r.s
            << "," << r.I << "," << r.bound << "," << r.ratio << "\n";
      csv << "# trend(" << rep->rows.front().family << "): " << rep->trend << "\n";
    }
    write_file("trend.csv", csv.str());
    detail = "TH13A (4 grids), TH14A (g=2..6), CORMAINX (3 grids) all hold; trend.csv written";
    return true;
  });

  run(11, "generic projection of the 4d variety over 100 seeds", [](std::string& detail) {
    GeneratorSpec spec;
    spec.family = Family::VARIETY_4D_XYZ;
    spec.g = 3;
    Config cfg = gen(spec);
    long long before = count_incidences(cfg);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      auto [proj, desc] = project_generic(cfg, 3, seed, 50);
      if (proj.points.size() != cfg.points.size() || proj.lines.size() != cfg.lines.size()) {
        detail = "projection merged points or lines at seed " + std::to_string(seed);
        return false;
      }
      if (count_incidences(proj) != before) {
        detail = "incidence count changed at seed " + std::to_string(seed);
        return false;
      }
    }
    detail = "100 seeds: distinctness, 50 skew triples and incidence count preserved";
    return true;
  });

  run(12, "byte-identical reports for identical (spec, seed)", [](std::string& detail) {
    GeneratorSpec spec;
    spec.family = Family::CONE_PYTHAGOREAN;
    spec.n = 12;
    spec.m = 24;
    spec.seed = 99;
    auto r1 = run_experiment(spec, {"lemma", "bounds"}, BoundName::TH13A, Rational(10));
    auto r2 = run_experiment(spec, {"lemma", "bounds"}, BoundName::TH13A, Rational(10));
    std::string s1 = serialize(to_json(r1));
    std::string s2 = serialize(to_json(r2));
    if (s1 != s2) {
      detail = "serialized reports differ";
      return false;
    }
    write_file("report_run1.json", s1);
    write_file("report_run2.json", s2);
    std::ifstream f1("report_run1.json", std::ios::binary), f2("report_run2.json", std::ios::binary);
    std::string b1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string b2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    std::remove("report_run1.json");
    std::remove("report_run2.json");
    if (b1 != b2 || b1.empty()) {
      detail = "files differ on disk";
      return false;
    }
    detail = std::to_string(b1.size()) + " bytes, identical across two consecutive runs";
    return true;
  });

  double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
  if (total > 300.0) {
    std::printf("[FAIL] suite runtime %.2f s exceeds the 300 s budget\n", total);
    ++failures;
  }
  std::printf("%s: %d criteria failed, total %.2f s\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures, total);
  return failures == 0 ? 0 : 1;
}
