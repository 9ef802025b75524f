#include "occ/curves.hpp"

#include <doctest.h>
#include <random>

using occ::AffinePoint;
using occ::HomPolyCurve;
using occ::PolyCurve;
using occ::ProjPoint;
using occ::Rational;
using occ::TangentReport;

namespace {

PolyCurve mono(int i, int j, long c) { return PolyCurve::monomial(i, j, Rational(c)); }

// x^2 + y^2 - 1.
PolyCurve unit_circle() { return mono(2, 0, 1) + mono(0, 2, 1) + mono(0, 0, -1); }

AffinePoint pt(long x, long y) { return AffinePoint{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("homogenization round-trips through the affine chart") {
  const PolyCurve f = mono(2, 1, 3) + mono(1, 0, -2) + mono(0, 0, 7);
  const HomPolyCurve h = occ::homogenize(f);
  CHECK(h.degree() == 3);
  CHECK(h.coeff(2, 1) == Rational(3));
  CHECK(h.coeff(1, 0) == Rational(-2));  // -2 x z^2
  CHECK(h.coeff(0, 0) == Rational(7));   // 7 z^3
  CHECK(occ::dehomogenize(h) == f);
  // Homogeneous evaluation at an affine chart point matches.
  CHECK(h.eval(ProjPoint::from_affine(pt(2, -1))) == f.eval(pt(2, -1)));
}

TEST_CASE("polar of a conic with respect to a point is its chord-of-contact line") {
  // Unit circle, pole (2, 0): the polar is 2x - 1 = 0 homogenized as 2x - z.
  const HomPolyCurve h = occ::homogenize(unit_circle());
  const auto polar = occ::polar_curve(h, ProjPoint::from_affine(pt(2, 0)));
  REQUIRE(polar.has_value());
  CHECK(polar->degree() == 1);
  // D_p F = 2*(2x) + 0 + 1*(-2z) up to scale: 4x - 2z.
  HomPolyCurve want(1);
  want.add_term(1, 0, Rational(4));
  want.add_term(0, 0, Rational(-2));
  CHECK(*polar == want);
}

TEST_CASE("polar curve vanishes only in the degenerate pole position") {
  // For f = x^2 (double line), the polar with respect to (0 : 1 : 0) is
  // identically zero.
  const HomPolyCurve h = occ::homogenize(mono(2, 0, 1));
  CHECK_FALSE(occ::polar_curve(h, ProjPoint::direction(Rational(0), Rational(1))).has_value());
  CHECK(occ::polar_curve(h, ProjPoint::direction(Rational(1), Rational(0))).has_value());
  CHECK_THROWS_AS(occ::polar_curve(occ::homogenize(PolyCurve::constant(Rational(3))),
                                   ProjPoint::from_affine(pt(0, 0))),
                  std::invalid_argument);
}

TEST_CASE("polar points lie on the polar curve iff conjugate") {
  // Property of the polar: q lies on D_p F iff p lies on D_q F (reciprocity),
  // checked on the unit circle for a few integer poles.
  const HomPolyCurve h = occ::homogenize(unit_circle());
  const AffinePoint poles[] = {pt(2, 0), pt(3, 1), pt(0, 5), pt(-2, -2)};
  for (const AffinePoint& p : poles) {
    for (const AffinePoint& q : poles) {
      const auto dp = occ::polar_curve(h, ProjPoint::from_affine(p));
      const auto dq = occ::polar_curve(h, ProjPoint::from_affine(q));
      REQUIRE(dp.has_value());
      REQUIRE(dq.has_value());
      CHECK(dp->eval(ProjPoint::from_affine(q)).is_zero() ==
            dq->eval(ProjPoint::from_affine(p)).is_zero());
    }
  }
}

TEST_CASE("tangent lines from outside, on, and inside a conic") {
  const PolyCurve circle = unit_circle();

  const TangentReport outside = occ::tangent_lines_to_conic(circle, pt(2, 0));
  CHECK(outside.count == 2);

  const TangentReport on = occ::tangent_lines_to_conic(circle, pt(1, 0));
  CHECK(on.count == 1);
  REQUIRE(on.exact);
  REQUIRE(on.lines.size() == 1);
  CHECK(on.lines[0] == occ::Line(Rational(1), Rational(0), Rational(1)));
  REQUIRE(on.touch_points.size() == 1);
  CHECK(on.touch_points[0] == pt(1, 0));

  const TangentReport inside = occ::tangent_lines_to_conic(circle, pt(0, 0));
  CHECK(inside.count == 0);
  CHECK(inside.lines.empty());
}

TEST_CASE("rational tangency data is reported exactly when it exists") {
  // From (5/4, 0) the two tangents to the unit circle touch at rational
  // points (4/5, +-3/5): a 3-4-5 configuration.
  const PolyCurve circle = unit_circle();
  const AffinePoint pole{Rational(5, 4), Rational(0)};
  const TangentReport r = occ::tangent_lines_to_conic(circle, pole);
  CHECK(r.count == 2);
  REQUIRE(r.exact);
  REQUIRE(r.lines.size() == 2);
  REQUIRE(r.touch_points.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    // Touch points lie on the conic and on their tangent line; the pole
    // lies on each tangent line as well.
    CHECK(occ::curve_membership(circle, r.touch_points[i]));
    CHECK(r.lines[i].contains(r.touch_points[i]));
    CHECK(r.lines[i].contains(pole));
  }
  CHECK(r.touch_points[0] != r.touch_points[1]);

  // From (2, 0) the touch points (1/2, +-sqrt(3)/2) are irrational: count
  // is still certified but no exact data is produced.
  const TangentReport ir = occ::tangent_lines_to_conic(circle, pt(2, 0));
  CHECK(ir.count == 2);
  CHECK_FALSE(ir.exact);
  CHECK(ir.lines.empty());
}

TEST_CASE("degenerate conics are rejected") {
  // x^2 - y^2 factors into two lines.
  CHECK_THROWS_AS(occ::tangent_lines_to_conic(mono(2, 0, 1) + mono(0, 2, -1), pt(5, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(occ::tangent_lines_to_conic(mono(1, 0, 1), pt(0, 0)), std::invalid_argument);
}

TEST_CASE("tangent bound is sharp for conics and bounds cubics") {
  CHECK(occ::tangent_count_upper(unit_circle(), pt(2, 0)) == 2);
  // Fermat cubic x^3 + y^3 - 1: square-free, no rational linear factor,
  // e = d = 3 gives e(e-1) + (d-e) = 6.
  const PolyCurve cubic = mono(3, 0, 1) + mono(0, 3, 1) + mono(0, 0, -1);
  CHECK(occ::tangent_count_upper(cubic, pt(2, 2)) == 6);
  // A conic times a line: square-free part splits one linear factor,
  // e = 2, d = 3 -> 2*1 + 1 = 3.
  const PolyCurve mixed = unit_circle() * (mono(1, 0, 1) + mono(0, 0, -5));
  CHECK(occ::tangent_count_upper(mixed, pt(7, 0)) == 3);
  // Squared factors do not inflate the bound.
  const PolyCurve doubled = unit_circle() * unit_circle();
  CHECK(occ::tangent_count_upper(doubled, pt(2, 0)) == 2);
  CHECK_THROWS_AS(occ::tangent_count_upper(mono(1, 0, 1), pt(0, 0)), std::invalid_argument);
}

TEST_CASE("conic tangent count never exceeds the bound on random poles") {
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<long> c(-8, 8);
  const PolyCurve circle = unit_circle();
  for (int trial = 0; trial < 50; ++trial) {
    const AffinePoint p{Rational(c(rng), 2), Rational(c(rng), 2)};
    const TangentReport r = occ::tangent_lines_to_conic(circle, p);
    CHECK(r.count <= occ::tangent_count_upper(circle, p));
    CHECK(r.count >= 0);
    if (r.exact) {
      CHECK(static_cast<int>(r.lines.size()) == r.count);
      CHECK(static_cast<int>(r.touch_points.size()) == r.count);
    }
  }
}

TEST_CASE("curve membership is the exact vanishing test") {
  CHECK(occ::curve_membership(unit_circle(), pt(0, 1)));
  CHECK(occ::curve_membership(unit_circle(), AffinePoint{Rational(3, 5), Rational(4, 5)}));
  CHECK_FALSE(occ::curve_membership(unit_circle(), pt(1, 1)));
}
