#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "incgeo/config.hpp"
#include "incgeo/poly_io.hpp"
#include "incgeo/resultant.hpp"
#include "incgeo/unipoly.hpp"

namespace incgeo {

inline constexpr int kFlecnodeDegreeCap = 6;     // refuse larger inputs (resultant blowup)
inline constexpr int kSquareFreeDegreeCap = 20;  // skip square-free reduction above this
inline constexpr int kExpandDegreeCap = 60;      // keep the product factored above this

// Result of the flecnode construction. The polynomial is kept as a product
// of chart factors; it is expanded whenever the combined degree is small
// enough. Zero-set-level contracts (vanishing on lines, divisibility by an
// irreducible factor, evaluation) work on the factored form directly.
struct FlecnodeResult {
  bool zero = false;
  std::vector<MultiPoly> fl_factors;      // nonconstant chart polynomials
  std::optional<MultiPoly> fl_expanded;   // product, when expanded
  std::vector<std::string> construction_log;
  int true_degree_bound = 0;              // Salmon's 11*D - 24 (clamped at 0)

  bool is_zero() const { return zero; }

  const MultiPoly& fl() const {
    static const MultiPoly kZero = MultiPoly::zero({Var::x, Var::y, Var::z});
    static const MultiPoly kOne = MultiPoly::one();
    if (zero) return kZero;
    if (fl_expanded) return *fl_expanded;
    if (fl_factors.empty()) return kOne;
    throw std::logic_error("flecnode polynomial kept factored; use the factor-aware helpers");
  }

  Rational eval(const AffPoint& p) const {
    if (zero) return Rational(0);
    Rational prod(1);
    for (const auto& q : fl_factors) prod *= q.with_vars({Var::x, Var::y, Var::z}).eval(p.c);
    return prod;
  }

  bool vanishes_on(const ProjLine& ell) const {
    if (zero) return true;
    for (const auto& q : fl_factors)
      if (vanishes_on_line(q.with_vars({Var::x, Var::y, Var::z}), ell)) return true;
    return false;
  }

  // divisibility by an irreducible q (q | product iff q | some factor)
  bool divisible_by(const MultiPoly& q) const {
    if (zero) return true;
    for (const auto& f : fl_factors)
      if (divides(q, f)) return true;
    return false;
  }
};

namespace detail {

// One elimination round: remove `v` from the system. Conjunctive semantics;
// a surviving nonzero constant marks the system unsatisfiable. Dropping a
// constraint only enlarges the final zero set, which is the sound side for
// the flecnode vanishing contract.
inline std::vector<MultiPoly> eliminate_var(std::vector<MultiPoly> eqs, Var v) {
  std::vector<MultiPoly> live;
  for (auto& e : eqs) {
    if (e.is_zero()) continue;
    if (e.is_constant()) return {MultiPoly::one()};  // unsatisfiable
    live.push_back(std::move(e));
  }
  std::vector<MultiPoly> with_v, without_v;
  for (auto& e : live) (e.degree_in(v) > 0 ? with_v : without_v).push_back(std::move(e));
  if (with_v.empty()) return without_v;
  if (with_v.size() == 1) return without_v;  // exists-v is generically solvable; drop it
  size_t pivot = 0;
  for (size_t i = 1; i < with_v.size(); ++i)
    if (with_v[i].degree_in(v) < with_v[pivot].degree_in(v)) pivot = i;
  std::vector<MultiPoly> out = without_v;
  for (size_t i = 0; i < with_v.size(); ++i) {
    if (i == pivot) continue;
    MultiPoly r = sylvester_resultant(with_v[pivot], with_v[i], v);
    if (r.is_zero()) continue;  // degenerate pair constrains nothing
    if (r.is_constant()) return {MultiPoly::one()};
    out.push_back(std::move(r));
  }
  return out;
}

inline MultiPoly maybe_square_free(const MultiPoly& p, std::vector<std::string>& log,
                                   const std::string& what) {
  if (p.is_zero() || p.is_constant()) return p;
  if (p.degree() <= kSquareFreeDegreeCap) return square_free_part(p);
  log.push_back(what + ": square-free reduction skipped (degree " +
                std::to_string(p.degree()) + " above cap)");
  return p.monic();
}

}  // namespace detail

// Flecnode polynomial of a trivariate f by resultant elimination of the
// direction v from G_k = directional_derivative_form(f, k), k = 1,2,3.
// Three affine charts v1=1 / v2=1 / v3=1 cover the projective direction
// space; within a chart the later direction variable is eliminated first
// (v3 then v2 in the v1 chart). Chart results are combined by product.
// The output vanishes on every line fully contained in Z(f); it may carry
// extraneous factors, so no degree identity is asserted (only the bound
// 11D-24 for the classical construction is recorded).
inline FlecnodeResult flecnode_poly(const MultiPoly& f_in) {
  MultiPoly f = f_in.with_vars({Var::x, Var::y, Var::z});
  const int D = f.degree();
  if (D < 2) throw std::invalid_argument("flecnode_poly: degree must be at least 2");
  if (D > kFlecnodeDegreeCap)
    throw std::invalid_argument("flecnode_poly: degree above documented cap of 6");
  if (!is_square_free(f)) throw std::invalid_argument("flecnode_poly: f must be square-free");

  FlecnodeResult result;
  result.true_degree_bound = std::max(0, 11 * D - 24);

  std::vector<MultiPoly> g(4);
  for (int k = 1; k <= 3; ++k) {
    g[static_cast<size_t>(k)] = directional_derivative_form(f, k);
    if (g[static_cast<size_t>(k)].is_zero()) {
      result.zero = true;
      result.construction_log.push_back("grad_v^" + std::to_string(k) +
                                        " f vanishes identically; flecnode polynomial is 0");
      return result;
    }
  }

  struct Chart {
    Var unit;
    Var first_elim;   // eliminated first (the later variable)
    Var second_elim;  // eliminated second
  };
  const Chart charts[3] = {{Var::v1, Var::v3, Var::v2},
                           {Var::v2, Var::v3, Var::v1},
                           {Var::v3, Var::v2, Var::v1}};

  for (const Chart& ch : charts) {
    std::vector<MultiPoly> eqs;
    for (int k = 1; k <= 3; ++k)
      eqs.push_back(g[static_cast<size_t>(k)].substitute_var(ch.unit, MultiPoly::one()));
    std::vector<MultiPoly> s1 = detail::eliminate_var(std::move(eqs), ch.first_elim);

    std::ostringstream log;
    log << "chart " << var_name(ch.unit) << "=1: eliminated " << var_name(ch.first_elim)
        << " then " << var_name(ch.second_elim) << "; intermediate degrees";
    for (const auto& r : s1) log << " " << r.degree();

    std::vector<MultiPoly> s2 = detail::eliminate_var(std::move(s1), ch.second_elim);

    if (s2.empty()) {
      result.zero = true;
      log << "; system degenerated, chart polynomial is 0";
      result.construction_log.push_back(log.str());
      return result;
    }
    // pick the lowest-degree survivor; any member vanishes on the projection
    size_t best = 0;
    for (size_t i = 1; i < s2.size(); ++i)
      if (s2[i].degree() < s2[best].degree()) best = i;
    MultiPoly chart_poly = s2[best];
    if (chart_poly.is_constant()) {
      log << "; no flecnodes in this chart";
      result.construction_log.push_back(log.str());
      continue;
    }
    chart_poly = detail::maybe_square_free(chart_poly, result.construction_log,
                                           "chart " + var_name(ch.unit) + "=1");
    log << "; chart polynomial degree " << chart_poly.degree();
    result.construction_log.push_back(log.str());
    result.fl_factors.push_back(chart_poly.monic().with_vars({Var::x, Var::y, Var::z}));
  }

  int total_deg = 0;
  for (const auto& q : result.fl_factors) total_deg += q.degree();
  if (total_deg <= kExpandDegreeCap) {
    MultiPoly prod = MultiPoly::one();
    for (const auto& q : result.fl_factors) prod = prod * q;
    prod = detail::maybe_square_free(prod, result.construction_log, "combined product");
    result.fl_expanded = prod.monic().with_vars({Var::x, Var::y, Var::z});
  } else {
    result.construction_log.push_back("combined product kept factored (degree " +
                                      std::to_string(total_deg) + " above expansion cap)");
  }
  return result;
}

// --- Cayley--Salmon--Monge ruledness test -------------------------------

enum class RuledVerdict { NOT_RULED, RULED_EVIDENCE };

struct FactorVerdict {
  MultiPoly factor;
  RuledVerdict verdict;
  std::optional<AffPoint> certificate;  // point of Z(q) with fl(q) != 0
  std::string note;
};

namespace detail {

// Rational points of Z(q) found by axis-parallel scans with exact rational
// root extraction; deterministic order, small coordinates first.
template <typename Fn>
inline bool scan_surface_points(const MultiPoly& q, int radius_cap, Fn&& visit) {
  MultiPoly f = q.with_vars({Var::x, Var::y, Var::z});
  const Var axes[3] = {Var::z, Var::y, Var::x};
  for (int radius = 0; radius <= radius_cap; ++radius) {
    for (long a = -radius; a <= radius; ++a) {
      for (long b = -radius; b <= radius; ++b) {
        if (std::max(std::abs(a), std::abs(b)) != radius) continue;  // shell only
        for (Var axis : axes) {
          std::map<Var, MultiPoly> sub;
          QVec fixed = {Rational(a), Rational(b)};
          size_t fi = 0;
          for (Var v : {Var::x, Var::y, Var::z}) {
            if (v == axis) continue;
            sub.emplace(v, MultiPoly::constant(fixed[fi++]));
          }
          MultiPoly slice = f.substitute(sub);
          if (slice.is_zero() || slice.is_constant()) continue;
          for (const Rational& root : rational_roots(to_unipoly(slice, axis))) {
            AffPoint p;
            fi = 0;
            for (Var v : {Var::x, Var::y, Var::z})
              p.c.push_back(v == axis ? root : fixed[fi++]);
            if (visit(p)) return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace detail

// Per-factor verdicts. Factors are caller-asserted irreducible over the
// rationals with product f (up to scalar). NOT_RULED always carries an
// explicit certificate point p in Z(q) with fl(q)(p) != 0, re-verified by
// evaluation; RULED_EVIDENCE is complete over the complex field but only
// evidence here because of possible extraneous factors.
inline std::vector<FactorVerdict> cayley_salmon_test(const MultiPoly& f,
                                                     const std::vector<MultiPoly>& factors) {
  MultiPoly prod = MultiPoly::one();
  for (const auto& q : factors) prod = prod * q;
  if (prod.monic() != f.monic())
    throw std::invalid_argument("cayley_salmon_test: factor product differs from f");

  std::vector<FactorVerdict> out;
  for (const auto& q_in : factors) {
    MultiPoly q = q_in.with_vars({Var::x, Var::y, Var::z});
    FactorVerdict fv{q, RuledVerdict::RULED_EVIDENCE, std::nullopt, ""};
    FlecnodeResult flq = flecnode_poly(q);
    if (flq.is_zero()) {
      fv.note = "flecnode polynomial of the factor is identically zero";
    } else if (flq.divisible_by(q)) {
      fv.note = "factor divides its flecnode polynomial";
    } else {
      fv.verdict = RuledVerdict::NOT_RULED;
      bool found = detail::scan_surface_points(q, 40, [&](const AffPoint& p) {
        if (sgn(q.eval(p.c)) != 0) return false;  // not on the factor surface
        if (sgn(flq.eval(p)) == 0) return false;
        fv.certificate = p;
        return true;
      });
      if (!found)
        throw std::logic_error(
            "cayley_salmon_test: factor does not divide its flecnode polynomial but no "
            "rational certificate point was found within the scan radius");
      fv.note = "certificate point on Z(q) with fl(q) nonzero";
    }
    out.push_back(std::move(fv));
  }
  return out;
}

// --- line-through-point decision ----------------------------------------

enum class LineSearchStatus { NO, WITNESS, RESULTANT_ZERO };

struct LineSearchResult {
  LineSearchStatus status;
  std::vector<QVec> witnesses;  // rational projective directions, first nonzero = 1
  std::map<std::string, std::string> residuals;  // per-chart leftover univariate, as text
};

namespace detail {

inline QVec normalize_direction(QVec v) {
  size_t pivot = 0;
  while (pivot < v.size() && sgn(v[pivot]) == 0) ++pivot;
  if (pivot == v.size()) throw std::logic_error("zero direction");
  Rational lead = v[pivot];
  for (auto& c : v) c /= lead;
  return v;
}

// Substitute b := -(alpha + beta*a)/gamma into F (viewed in b), clearing
// gamma powers; alpha,beta,gamma are the chart-linear equation coefficients.
inline MultiPoly substitute_linear(const MultiPoly& F, Var b_var, const MultiPoly& neg_b_num,
                                   const MultiPoly& gamma) {
  auto cs = F.coefficients_in(b_var);
  int d = static_cast<int>(cs.size()) - 1;
  MultiPoly out = MultiPoly::zero();
  MultiPoly num_pow = MultiPoly::one();
  std::vector<MultiPoly> gpow(static_cast<size_t>(d) + 1, MultiPoly::one());
  for (int i = 1; i <= d; ++i) gpow[static_cast<size_t>(i)] = gpow[static_cast<size_t>(i - 1)] * gamma;
  for (int k = 0; k <= d; ++k) {
    out += cs[static_cast<size_t>(k)] * num_pow * gpow[static_cast<size_t>(d - k)];
    if (k < d) num_pow = num_pow * neg_b_num;
  }
  return out;
}

}  // namespace detail

// Decides whether some direction v solves grad_v^k f(p) = 0 for all
// 1 <= k <= deg f (equivalently: a line through p fully contained in Z(f)).
// NO only when the elimination certifies unsolvability over the complex
// numbers in every chart; WITNESS carries a rational direction (re-verified
// by full line containment); RESULTANT_ZERO otherwise (a complex or
// irrational-direction line may exist).
inline LineSearchResult lines_through_point_exist(const MultiPoly& f_in, const AffPoint& p) {
  MultiPoly f = f_in.with_vars({Var::x, Var::y, Var::z});
  if (p.dim() != 3) throw std::invalid_argument("lines_through_point_exist: needs a 3-space point");
  if (sgn(f.eval(p.c)) != 0)
    throw std::invalid_argument("lines_through_point_exist: p is not on Z(f)");

  const int D = f.degree();
  std::vector<MultiPoly> eqs;  // polynomials in v1,v2,v3 at the fixed p
  for (int k = 1; k <= D; ++k) {
    MultiPoly gk = directional_derivative_form(f, k);
    std::map<Var, MultiPoly> at_p = {{Var::x, MultiPoly::constant(p.c[0])},
                                     {Var::y, MultiPoly::constant(p.c[1])},
                                     {Var::z, MultiPoly::constant(p.c[2])}};
    MultiPoly e = gk.substitute(at_p);
    if (!e.is_zero()) eqs.push_back(e.with_vars({Var::v1, Var::v2, Var::v3}));
  }

  LineSearchResult result;
  result.status = LineSearchStatus::NO;

  auto record_witness = [&](QVec v) {
    v = detail::normalize_direction(std::move(v));
    for (const auto& w : result.witnesses)
      if (w == v) return;
    ProjLine ell = make_line(p, v);
    if (!vanishes_on_line(f, ell))
      throw std::logic_error("lines_through_point_exist: candidate failed line containment");
    result.witnesses.push_back(std::move(v));
  };

  if (eqs.empty()) {  // all derivative forms vanish: every direction works
    record_witness({Rational(1), Rational(0), Rational(0)});
    result.status = LineSearchStatus::WITNESS;
    return result;
  }

  bool any_unknown = false;

  // chart C: the single direction (0,0,1)
  {
    bool ok = true;
    for (const auto& e : eqs) {
      MultiPoly c = e.substitute({{Var::v1, MultiPoly::zero()},
                                  {Var::v2, MultiPoly::zero()},
                                  {Var::v3, MultiPoly::one()}});
      if (!c.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) record_witness({Rational(0), Rational(0), Rational(1)});
  }

  // chart B: v = (0, 1, b) -- univariate system in v3
  {
    std::vector<UniPoly> sys;
    bool inconsistent = false, all_zero = true;
    for (const auto& e : eqs) {
      MultiPoly c = e.substitute({{Var::v1, MultiPoly::zero()}, {Var::v2, MultiPoly::one()}});
      if (c.is_zero()) continue;
      all_zero = false;
      if (c.is_constant()) {
        inconsistent = true;
        break;
      }
      sys.push_back(to_unipoly(c, Var::v3));
    }
    if (all_zero) {
      record_witness({Rational(0), Rational(1), Rational(0)});
    } else if (!inconsistent) {
      UniPoly g = sys.front();
      for (size_t i = 1; i < sys.size(); ++i) g = uni_gcd(g, sys[i]);
      if (uni_degree(g) >= 1) {
        bool found = false;
        for (const Rational& b0 : rational_roots(g)) {
          record_witness({Rational(0), Rational(1), b0});
          found = true;
        }
        if (!found ||
            static_cast<int>(rational_roots(g).size()) < uni_degree(uni_square_free(g))) {
          any_unknown = true;  // nonrational common roots remain
          result.residuals["chart v2=1"] =
              to_text(MultiPoly::from_coefficients(
                  [&] {
                    std::vector<MultiPoly> cs;
                    for (const auto& c : g) cs.push_back(MultiPoly::constant(c));
                    return cs;
                  }(),
                  Var::v3));
        }
      }
      // uni gcd constant: no common complex root in this chart -> chart NO
    }
  }

  // chart A: v = (1, a, b) with a = v2, b = v3
  {
    std::vector<MultiPoly> sys;
    bool inconsistent = false, all_zero = true;
    for (const auto& e : eqs) {
      MultiPoly c = e.substitute_var(Var::v1, MultiPoly::one());
      if (c.is_zero()) continue;
      all_zero = false;
      if (c.is_constant()) {
        inconsistent = true;
        break;
      }
      sys.push_back(c);
    }
    if (all_zero) {
      record_witness({Rational(1), Rational(0), Rational(0)});
    } else if (!inconsistent) {
      // prefer an exact reduction through a linear equation
      int lin_idx = -1;
      for (size_t i = 0; i < sys.size(); ++i)
        if (sys[i].degree() == 1) {
          lin_idx = static_cast<int>(i);
          break;
        }
      if (lin_idx >= 0) {
        const MultiPoly& lin = sys[static_cast<size_t>(lin_idx)];
        auto bc = lin.coefficients_in(Var::v3);
        if (bc.size() == 2 && !bc[1].is_zero()) {
          // b = -(alpha + beta a) / gamma with gamma constant
          MultiPoly gamma = bc[1];
          MultiPoly neg_num = -bc[0];
          std::vector<UniPoly> reduced;
          for (size_t i = 0; i < sys.size(); ++i) {
            if (static_cast<int>(i) == lin_idx) continue;
            MultiPoly r = detail::substitute_linear(sys[i], Var::v3, neg_num, gamma);
            if (r.is_zero()) continue;
            if (r.is_constant()) {
              reduced.clear();
              reduced.push_back({r.constant_value()});
              break;
            }
            reduced.push_back(to_unipoly(r, Var::v2));
          }
          if (reduced.empty()) {
            // only the linear equation constrains: a one-parameter family
            Rational a0(0);
            Rational b0 = -(bc[0].with_vars({Var::v2}).eval({a0})) / gamma.constant_value();
            record_witness({Rational(1), a0, b0});
          } else {
            UniPoly g = reduced.front();
            for (size_t i = 1; i < reduced.size(); ++i) g = uni_gcd(g, reduced[i]);
            if (uni_degree(g) >= 1) {
              auto roots = rational_roots(g);
              for (const Rational& a0 : roots) {
                Rational b0 = -(bc[0].with_vars({Var::v2}).eval({a0})) / gamma.constant_value();
                bool all_ok = true;
                for (const auto& e : sys)
                  if (sgn(e.with_vars({Var::v2, Var::v3}).eval({a0, b0})) != 0) {
                    all_ok = false;
                    break;
                  }
                if (all_ok) record_witness({Rational(1), a0, b0});
              }
              if (static_cast<int>(roots.size()) < uni_degree(uni_square_free(g))) {
                any_unknown = true;
                result.residuals["chart v1=1"] = to_text(MultiPoly::from_coefficients(
                    [&] {
                      std::vector<MultiPoly> cs;
                      for (const auto& c : g) cs.push_back(MultiPoly::constant(c));
                      return cs;
                    }(),
                    Var::v2));
              }
            } else if (uni_degree(g) == 0 && !g.empty()) {
              // nonzero constant gcd: chart certified empty
            } else {
              any_unknown = true;
            }
          }
        } else {
          // linear equation free of v3: a is pinned, reduce to univariate in b
          Rational a0 = -bc[0].coefficients_in(Var::v2)[0].constant_value() /
                        bc[0].coefficients_in(Var::v2)[1].constant_value();
          std::vector<UniPoly> reduced;
          bool chart_empty = false;
          for (size_t i = 0; i < sys.size(); ++i) {
            if (static_cast<int>(i) == lin_idx) continue;
            MultiPoly r = sys[i].substitute_var(Var::v2, MultiPoly::constant(a0));
            if (r.is_zero()) continue;
            if (r.is_constant()) {
              chart_empty = true;
              break;
            }
            reduced.push_back(to_unipoly(r, Var::v3));
          }
          if (!chart_empty) {
            if (reduced.empty()) {
              record_witness({Rational(1), a0, Rational(0)});
            } else {
              UniPoly g = reduced.front();
              for (size_t i = 1; i < reduced.size(); ++i) g = uni_gcd(g, reduced[i]);
              if (uni_degree(g) >= 1) {
                auto roots = rational_roots(g);
                for (const Rational& b0 : roots) record_witness({Rational(1), a0, b0});
                if (static_cast<int>(roots.size()) < uni_degree(uni_square_free(g)))
                  any_unknown = true;
              }
            }
          }
        }
      } else if (sys.size() == 1) {
        // a single nonlinear curve of directions: search a small rational grid
        bool found = false;
        for (long dn = 1; dn <= 4 && !found; ++dn)
          for (long an = -8; an <= 8 && !found; ++an)
            for (long bn = -8; bn <= 8 && !found; ++bn) {
              Rational a0 = rat(an, dn), b0 = rat(bn, dn);
              if (sgn(sys[0].with_vars({Var::v2, Var::v3}).eval({a0, b0})) == 0) {
                record_witness({Rational(1), a0, b0});
                found = true;
              }
            }
        if (!found) any_unknown = true;
      } else {
        // no linear handle (singular point): pairwise resultants in v3
        size_t pivot = 0;
        std::vector<MultiPoly> with_b, b_free;
        for (auto& e : sys) (e.degree_in(Var::v3) > 0 ? with_b : b_free).push_back(e);
        std::vector<UniPoly> univs;
        for (const auto& e : b_free) univs.push_back(to_unipoly(e, Var::v2));
        if (with_b.size() >= 2) {
          for (size_t i = 1; i < with_b.size(); ++i)
            if (with_b[i].degree_in(Var::v3) < with_b[pivot].degree_in(Var::v3)) pivot = i;
          for (size_t i = 0; i < with_b.size(); ++i) {
            if (i == pivot) continue;
            MultiPoly r = sylvester_resultant(with_b[pivot], with_b[i], Var::v3);
            if (r.is_zero()) continue;
            if (r.is_constant()) {
              univs.clear();
              univs.push_back({r.constant_value()});
              break;
            }
            univs.push_back(to_unipoly(r, Var::v2));
          }
        }
        if (univs.empty()) {
          // positive-dimensional or untestable: grid search
          bool found = false;
          for (long dn = 1; dn <= 4 && !found; ++dn)
            for (long an = -8; an <= 8 && !found; ++an)
              for (long bn = -8; bn <= 8 && !found; ++bn) {
                Rational a0 = rat(an, dn), b0 = rat(bn, dn);
                bool ok = true;
                for (const auto& e : sys)
                  if (sgn(e.with_vars({Var::v2, Var::v3}).eval({a0, b0})) != 0) {
                    ok = false;
                    break;
                  }
                if (ok) {
                  record_witness({Rational(1), a0, b0});
                  found = true;
                }
              }
          if (!found) any_unknown = true;
        } else {
          UniPoly g = univs.front();
          for (size_t i = 1; i < univs.size(); ++i) g = uni_gcd(g, univs[i]);
          if (uni_degree(g) >= 1) {
            bool all_resolved = true;
            for (const Rational& a0 : rational_roots(g)) {
              std::vector<UniPoly> slice;
              bool empty_slice = false;
              for (const auto& e : sys) {
                MultiPoly r = e.substitute_var(Var::v2, MultiPoly::constant(a0));
                if (r.is_zero()) continue;
                if (r.is_constant()) {
                  empty_slice = true;
                  break;
                }
                slice.push_back(to_unipoly(r, Var::v3));
              }
              if (empty_slice) continue;
              if (slice.empty()) {
                record_witness({Rational(1), a0, Rational(0)});
                continue;
              }
              UniPoly gs = slice.front();
              for (size_t i = 1; i < slice.size(); ++i) gs = uni_gcd(gs, slice[i]);
              if (uni_degree(gs) >= 1) {
                auto roots = rational_roots(gs);
                for (const Rational& b0 : roots) record_witness({Rational(1), a0, b0});
                if (static_cast<int>(roots.size()) < uni_degree(uni_square_free(gs)))
                  all_resolved = false;
              }
            }
            if (static_cast<int>(rational_roots(g).size()) < uni_degree(uni_square_free(g)) ||
                !all_resolved)
              any_unknown = true;
          }
          // constant nonzero gcd: chart certified empty over the complexes
        }
      }
    }
  }

  if (!result.witnesses.empty())
    result.status = LineSearchStatus::WITNESS;
  else if (any_unknown)
    result.status = LineSearchStatus::RESULTANT_ZERO;
  else
    result.status = LineSearchStatus::NO;
  return result;
}

}  // namespace incgeo
