#include <catch2/catch_amalgamated.hpp>

#include "incgeo/flecnode.hpp"
#include "incgeo/lab.hpp"
#include "incgeo/poly_io.hpp"
#include "incgeo/surfaces.hpp"

using namespace incgeo;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

AffPoint pt3(long x, long y, long z) { return AffPoint{{Rational(x), Rational(y), Rational(z)}}; }

}  // namespace

TEST_CASE("is_singular_point pinned examples") {
  MultiPoly cone = P("x^2 + y^2 - z^2");
  CHECK(is_singular_point(cone, pt3(0, 0, 0)));
  CHECK_FALSE(is_singular_point(cone, pt3(3, 4, 5)));
  MultiPoly reg = P("z - x*y");
  CHECK_FALSE(is_singular_point(reg, pt3(0, 0, 0)));
  CHECK_FALSE(is_singular_point(reg, pt3(2, 3, 6)));
  CHECK_THROWS(is_singular_point(cone, pt3(1, 1, 1)));  // off the surface
}

TEST_CASE("multiplicity_at pinned examples") {
  CHECK(multiplicity_at(P("x^2 + y^2 - z^2"), pt3(0, 0, 0)) == 2);
  CHECK(multiplicity_at(P("z - x*y"), pt3(0, 0, 0)) == 1);
  // (z-xy)(z+xy) = z^2 - x^2 y^2: lowest form at the origin has degree 2
  MultiPoly f = (P("z - x*y") * P("z + x*y")).with_vars({Var::x, Var::y, Var::z});
  CHECK(multiplicity_at(f, pt3(0, 0, 0)) == 2);
}

TEST_CASE("multiplicity vs singularity equivalence on sampled points") {
  SplitMix64 rng(301);
  MultiPoly cone = P("x^2 + y^2 - z^2");
  for (int i = 0; i < 50; ++i) {
    long k = rng.int_in(1, 9), l = rng.int_in(1, 9);
    AffPoint p{{Rational(k * k - l * l), Rational(2 * k * l), Rational(k * k + l * l)}};
    bool sing = is_singular_point(cone, p);
    CHECK(sing == (multiplicity_at(cone, p) >= 2));
  }
  CHECK((is_singular_point(cone, pt3(0, 0, 0)) && multiplicity_at(cone, pt3(0, 0, 0)) >= 2));
}

TEST_CASE("tangent_plane pinned examples") {
  // z - xy at (1,1,1): gradient (-1,-1,1), plane -(x-1)-(y-1)+(z-1)=0
  HyperplaneH h = tangent_plane(P("z - x*y"), pt3(1, 1, 1));
  CHECK(hyperplane_contains_point(h, pt3(1, 1, 1)));
  // canonical form of -x - y + z + 1 = 0 divided by A1 = -1
  HyperplaneH expect = make_hyperplane({Rational(1), Rational(-1), Rational(-1), Rational(1)});
  CHECK(h == expect);

  HyperplaneH hs = tangent_plane(P("x^2 + y^2 + z^2 - 1"), pt3(1, 0, 0));
  HyperplaneH x1 = make_hyperplane({Rational(-1), Rational(1), Rational(0), Rational(0)});
  CHECK(hs == x1);

  CHECK_THROWS(tangent_plane(P("x^2 + y^2 - z^2"), pt3(0, 0, 0)));
}

TEST_CASE("is_flat_point pinned examples") {
  MultiPoly plane = P("x + y + z");
  CHECK(is_flat_point(plane, pt3(0, 0, 0)));
  CHECK(is_flat_point(plane, pt3(1, 2, -3)));
  CHECK_FALSE(is_flat_point(P("z - x*y"), pt3(0, 0, 0)));
  CHECK_FALSE(is_flat_point(P("z - x*y"), pt3(1, 1, 1)));
  CHECK_THROWS(is_flat_point(P("x^2 + y^2 - z^2"), pt3(0, 0, 0)));  // singular
}

TEST_CASE("line_curve_intersection_multiplicity pinned examples") {
  MultiPoly parabola = P("y - x^2");  // plane curve in (x, y)
  AffPoint origin{{Rational(0), Rational(0)}};
  ProjLine tangent = make_line(AffPoint{{Rational(0), Rational(0)}}, {Rational(1), Rational(0)});
  CHECK(line_curve_intersection_multiplicity(parabola, tangent, origin) == 2);
  ProjLine vertical = make_line(AffPoint{{Rational(0), Rational(0)}}, {Rational(0), Rational(1)});
  CHECK(line_curve_intersection_multiplicity(parabola, vertical, origin) == 1);
  CHECK_THROWS(line_curve_intersection_multiplicity(
      parabola, make_line(AffPoint{{Rational(0), Rational(0)}}, {Rational(1), Rational(1)}),
      AffPoint{{Rational(2), Rational(4)}}));  // p not on the line
}

TEST_CASE("intersection multiplicities sum to at most the curve degree") {
  // gamma = (y - x^2)(y + x^2 - 2): degree 4; cut with rational lines
  MultiPoly gamma = (P("y - x^2") * P("y + x^2 - 2")).with_vars({Var::x, Var::y});
  struct Case {
    ProjLine ell;
    std::vector<AffPoint> points;
  };
  std::vector<Case> cases;
  // y = 1 meets y=x^2 at (+-1, 1) and y=2-x^2 at (+-1, 1): same points, each multiplicity 2
  cases.push_back({make_line(AffPoint{{Rational(0), Rational(1)}}, {Rational(1), Rational(0)}),
                   {AffPoint{{Rational(1), Rational(1)}}, AffPoint{{Rational(-1), Rational(1)}}}});
  // x = 0 meets at (0,0) and (0,2)
  cases.push_back({make_line(AffPoint{{Rational(0), Rational(0)}}, {Rational(0), Rational(1)}),
                   {AffPoint{{Rational(0), Rational(0)}}, AffPoint{{Rational(0), Rational(2)}}}});
  for (const auto& c : cases) {
    int total = 0;
    for (const auto& p : c.points) {
      REQUIRE(point_on_line(p, c.ell));
      total += line_curve_intersection_multiplicity(gamma, c.ell, p);
    }
    CHECK(total <= gamma.degree());
  }
}

TEST_CASE("regulus_through reconstructs z - xy from three rulings") {
  auto ruling = [](long a) {
    return make_line(AffPoint{{Rational(a), Rational(0), Rational(0)}},
                     {Rational(0), Rational(1), Rational(a)});
  };
  MultiPoly q = regulus_through(ruling(0), ruling(1), ruling(2));
  MultiPoly expect = P("z - x*y").monic();
  CHECK(q == expect);
  // permutation invariance
  CHECK(regulus_through(ruling(1), ruling(2), ruling(0)) == expect);
  CHECK(regulus_through(ruling(2), ruling(0), ruling(1)) == expect);
  CHECK(regulus_through(ruling(2), ruling(1), ruling(0)) == expect);
  // coplanar pick errors
  ProjLine xaxis = make_line(pt3(0, 0, 0), {Rational(1), Rational(0), Rational(0)});
  ProjLine shifted = make_line(pt3(0, 1, 0), {Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS(regulus_through(xaxis, shifted, ruling(1)));
}

TEST_CASE("regulus_through reconstructs a one-sheeted hyperboloid") {
  // rulings of x^2 + y^2 - z^2 - 1 through rational circle points
  auto ruling = [](const Rational& p, const Rational& q) {
    return make_line(AffPoint{{p, q, Rational(0)}}, {-q, p, Rational(1)});
  };
  ProjLine l1 = ruling(rat(1), rat(0));
  ProjLine l2 = ruling(rat(0), rat(1));
  ProjLine l3 = ruling(rat(3, 5), rat(4, 5));
  MultiPoly hyp = P("x^2 + y^2 - z^2 - 1");
  for (const auto& l : {l1, l2, l3}) REQUIRE(vanishes_on_line(hyp, l));
  MultiPoly q = regulus_through(l1, l2, l3);
  CHECK(q == hyp.monic());
  CHECK(classify_quadric(q).cls == QuadricClass::REGULUS);
}

TEST_CASE("classify_quadric pinned examples") {
  CHECK(classify_quadric(P("z - x*y")).cls == QuadricClass::REGULUS);
  CHECK(classify_quadric(P("y - x^2")).cls == QuadricClass::NON_REGULUS_RULED);
  CHECK(classify_quadric(P("x^2 + y^2 + z^2 - 1")).cls == QuadricClass::NO_REAL_LINES);
  auto cone = classify_quadric(P("x^2 + y^2 - z^2"));
  CHECK(cone.cls == QuadricClass::CONE);
  REQUIRE(cone.apex.has_value());
  CHECK(*cone.apex == pt3(0, 0, 0));
  // further taxonomy
  CHECK(classify_quadric(P("x^2 - y^2")).cls == QuadricClass::PLANE_PAIR);
  CHECK(classify_quadric(P("x^2 - 1")).cls == QuadricClass::PLANE_PAIR);
  CHECK(classify_quadric(P("x*y - 1")).cls == QuadricClass::NON_REGULUS_RULED);
  CHECK(classify_quadric(P("x^2 + y^2 - 1")).cls == QuadricClass::NON_REGULUS_RULED);
  CHECK(classify_quadric(P("x^2 + y^2 + 1")).cls == QuadricClass::NO_REAL_LINES);
  CHECK(classify_quadric(P("x^2 + y^2 + z^2")).cls == QuadricClass::NO_REAL_LINES);
  CHECK(classify_quadric(P("x^2 + y^2 - z^2 - 1")).cls == QuadricClass::REGULUS);
  CHECK(classify_quadric(P("z - x^2 + y^2")).cls == QuadricClass::REGULUS);
  // rank-2 definite pairs: real locus is a line (the z-axis) or empty
  CHECK(classify_quadric(P("x^2 + y^2")).cls == QuadricClass::NON_REGULUS_RULED);
  CHECK(classify_quadric(P("x^2 + 1")).cls == QuadricClass::NO_REAL_LINES);
  CHECK_THROWS(classify_quadric(P("x^3 - y")));
}

TEST_CASE("REGULUS classification implies exactly two lines per point") {
  // Lemma: every non-singular point of a doubly ruled quadric lies on
  // exactly two contained lines; checked constructively on z = xy
  MultiPoly reg = P("z - x*y");
  REQUIRE(classify_quadric(reg).cls == QuadricClass::REGULUS);
  SplitMix64 rng(307);
  for (int i = 0; i < 20; ++i) {
    Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
    auto r = lines_through_point_exist(reg, AffPoint{{a, b, a * b}});
    REQUIRE(r.status == LineSearchStatus::WITNESS);
    CHECK(r.witnesses.size() == 2);
  }
  // same on the one-sheeted hyperboloid at rational circle points
  MultiPoly hyp = P("x^2 + y^2 - z^2 - 1");
  for (auto [p, q] : {std::pair<Rational, Rational>{rat(1), rat(0)},
                      {rat(3, 5), rat(4, 5)},
                      {rat(5, 13), rat(12, 13)}}) {
    auto r = lines_through_point_exist(hyp, AffPoint{{p, q, Rational(0)}});
    REQUIRE(r.status == LineSearchStatus::WITNESS);
    CHECK(r.witnesses.size() == 2);
  }
}

TEST_CASE("cone accounting: all generated lines pass through the unique apex") {
  GeneratorSpec spec;
  spec.family = Family::CONE_PYTHAGOREAN;
  spec.n = 12;
  spec.m = 30;
  Config cfg = gen(spec);
  AffPoint apex = pt3(0, 0, 0);
  for (const auto& ell : cfg.lines) CHECK(point_on_line(apex, ell));
  // the apex is the unique point incident to >= 3 of the cataloged lines
  auto rich = rich_points(cfg, 3);
  REQUIRE(rich.size() == 1);
  CHECK(rich[0].first == apex);
  CHECK(rich[0].second == static_cast<int>(cfg.lines.size()));
}

TEST_CASE("SurfaceModel validation") {
  SurfaceModel sm;
  sm.f = (P("z - x*y") * P("z + x*y")).with_vars({Var::x, Var::y, Var::z});
  sm.factors = {P("z - x*y").with_vars({Var::x, Var::y, Var::z}),
                P("z + x*y").with_vars({Var::x, Var::y, Var::z})};
  sm.component_meta = {{false, std::nullopt, std::nullopt}, {false, std::nullopt, std::nullopt}};
  CHECK_NOTHROW(sm.validate());
  sm.factors.pop_back();
  CHECK_THROWS(sm.validate());
}
