#include "occ/carrier.hpp"

#include <doctest.h>
#include <random>

#include "occ/predicates.hpp"

using occ::AffinePoint;
using occ::Circle;
using occ::ExtendedLine;
using occ::GeneralizedCircle;
using occ::Line;
using occ::ProjPoint;
using occ::Rational;

namespace {

AffinePoint pt(long x, long y) { return AffinePoint{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("lines canonicalize to coprime integers with positive leading coefficient") {
  // 2x + 4y = 6 and x + 2y = 3 are the same line.
  CHECK(Line(Rational(2), Rational(4), Rational(6)) ==
        Line(Rational(1), Rational(2), Rational(3)));
  // Rational coefficients clear to integers: x/2 + y/3 = 1 -> 3x + 2y = 6.
  const Line l(Rational(1, 2), Rational(1, 3), Rational(1));
  CHECK(l.a() == 3);
  CHECK(l.b() == 2);
  CHECK(l.c() == 6);
  // Flipping every sign lands on the same canonical form.
  CHECK(Line(Rational(-1), Rational(2), Rational(5)) ==
        Line(Rational(1), Rational(-2), Rational(-5)));
  // Vertical line: a = 0 forces b > 0.
  const Line h(Rational(0), Rational(-3), Rational(6));
  CHECK(h.a() == 0);
  CHECK(h.b() == 1);
  CHECK(h.c() == -2);
  CHECK_THROWS_AS(Line(Rational(0), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("line through two points contains both and has the right direction") {
  const Line l = Line::through(pt(1, 1), pt(3, 2));
  CHECK(l.contains(pt(1, 1)));
  CHECK(l.contains(pt(3, 2)));
  CHECK(l.contains(pt(5, 3)));
  CHECK_FALSE(l.contains(pt(0, 0)));
  CHECK(l.direction() == ProjPoint::direction(Rational(2), Rational(1)));
  CHECK_THROWS_AS(Line::through(pt(1, 1), pt(1, 1)), std::invalid_argument);
}

TEST_CASE("equal lines hash equally") {
  occ::LineHash h;
  CHECK(h(Line(Rational(2), Rational(4), Rational(6))) ==
        h(Line(Rational(1), Rational(2), Rational(3))));
}

TEST_CASE("circles pin the leading coefficient and know their geometry") {
  // x^2 + y^2 - 25 = 0.
  const Circle c(Rational(0), Rational(0), Rational(-25));
  CHECK(c.center() == pt(0, 0));
  CHECK(c.radius_squared() == Rational(25));
  CHECK(c.contains(pt(3, 4)));
  CHECK(c.contains(pt(-5, 0)));
  CHECK_FALSE(c.contains(pt(1, 1)));
  CHECK(c.eval(pt(0, 0)) == Rational(-25));
  CHECK(c.eval(pt(6, 0)) == Rational(11));
  // Zero or negative squared radius is not a circle.
  CHECK_THROWS_AS(Circle(Rational(0), Rational(0), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(Circle(Rational(0), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("circle through three points is the circumscribed circle") {
  const Circle c = Circle::through(pt(5, 0), pt(3, 4), pt(-4, 3));
  CHECK(c == Circle(Rational(0), Rational(0), Rational(-25)));
  CHECK_THROWS_AS(Circle::through(pt(0, 0), pt(1, 1), pt(2, 2)), std::invalid_argument);
}

TEST_CASE("three points span a circle or a line depending on collinearity") {
  const GeneralizedCircle gc = occ::circle_through(pt(5, 0), pt(3, 4), pt(-4, 3));
  CHECK(gc.is_circle());
  CHECK(gc.contains(pt(0, -5)));
  CHECK_FALSE(gc.contains(pt(0, 0)));

  const GeneralizedCircle gl = occ::circle_through(pt(0, 0), pt(1, 1), pt(2, 2));
  CHECK(gl.is_line());
  CHECK(gl.line() == Line(Rational(1), Rational(-1), Rational(0)));
  CHECK(gl.contains(pt(7, 7)));
  CHECK(gl != gc);
  CHECK_THROWS_AS(gl.circle(), std::logic_error);
  CHECK_THROWS_AS(gc.line(), std::logic_error);
}

TEST_CASE("membership on a random circumscribed circle agrees with the lifted determinant") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> coord(-20, 20);
  int examined = 0;
  while (examined < 40) {
    const AffinePoint p = pt(coord(rng), coord(rng));
    const AffinePoint q = pt(coord(rng), coord(rng));
    const AffinePoint r = pt(coord(rng), coord(rng));
    if (p == q || q == r || p == r) continue;
    if (occ::collinear(p, q, r)) continue;
    const Circle c = Circle::through(p, q, r);
    const AffinePoint s = pt(coord(rng), coord(rng));
    CHECK(c.contains(s) == (occ::cocircular(p, q, r, s) == 0));
    ++examined;
  }
}

TEST_CASE("extended lines cover the line at infinity") {
  const ExtendedLine inf = ExtendedLine::at_infinity();
  CHECK(inf.is_at_infinity());
  CHECK(inf.contains(ProjPoint::direction(Rational(1), Rational(2))));
  CHECK_FALSE(inf.contains(ProjPoint::from_affine(pt(1, 2))));
  CHECK_THROWS_AS(inf.line(), std::logic_error);

  // Two directions span the line at infinity.
  CHECK(occ::line_through(ProjPoint::direction(Rational(1), Rational(0)),
                          ProjPoint::direction(Rational(0), Rational(1))) == inf);

  // An affine point and a direction span the affine line through the point
  // with that direction.
  const ExtendedLine el = occ::line_through(ProjPoint::from_affine(pt(1, 1)),
                                            ProjPoint::direction(Rational(2), Rational(1)));
  REQUIRE_FALSE(el.is_at_infinity());
  CHECK(el.line() == Line::through(pt(1, 1), pt(3, 2)));
  CHECK(el.contains(ProjPoint::direction(Rational(2), Rational(1))));
  CHECK(el.contains(ProjPoint::from_affine(pt(5, 3))));
  CHECK_FALSE(el.contains(ProjPoint::direction(Rational(1), Rational(1))));

  // Two affine points reduce to Line::through.
  const ExtendedLine ab = occ::line_through(ProjPoint::from_affine(pt(0, 0)),
                                            ProjPoint::from_affine(pt(1, 3)));
  REQUIRE_FALSE(ab.is_at_infinity());
  CHECK(ab.line() == Line::through(pt(0, 0), pt(1, 3)));
}
