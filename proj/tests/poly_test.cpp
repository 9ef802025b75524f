#include "occ/poly.hpp"

#include <doctest.h>
#include <random>

using occ::AffinePoint;
using occ::HomPolyCurve;
using occ::PolyCurve;
using occ::ProjPoint;
using occ::Rational;

namespace {

PolyCurve mono(int i, int j, long c) { return PolyCurve::monomial(i, j, Rational(c)); }

// x^2 - y^2.
PolyCurve diff_of_squares() { return mono(2, 0, 1) + mono(0, 2, -1); }

// Associates test: a and b cut out the same curve (each divides the other).
bool same_up_to_scale(const PolyCurve& a, const PolyCurve& b) {
  return occ::try_divide(a, b).has_value() && occ::try_divide(b, a).has_value();
}

}  // namespace

TEST_CASE("term bookkeeping: zero coefficients vanish, degree follows the support") {
  PolyCurve f;
  CHECK(f.is_zero());
  CHECK(f.degree() == -1);
  f.add_term(2, 1, Rational(3));
  CHECK(f.degree() == 3);
  CHECK(f.coeff(2, 1) == Rational(3));
  CHECK(f.coeff(0, 0) == Rational(0));
  f.add_term(2, 1, Rational(-3));
  CHECK(f.is_zero());
  CHECK(PolyCurve::constant(Rational(0)).is_zero());
  CHECK(PolyCurve::constant(Rational(5)).degree() == 0);
  CHECK_THROWS_AS(f.add_term(-1, 0, Rational(1)), std::invalid_argument);
}

TEST_CASE("arithmetic and evaluation agree with direct computation") {
  const PolyCurve f = diff_of_squares();
  const AffinePoint p{Rational(3), Rational(2)};
  CHECK(f.eval(p) == Rational(5));
  CHECK((f + f).eval(p) == Rational(10));
  CHECK((f - f).is_zero());
  CHECK((f * f).eval(p) == Rational(25));
  CHECK((Rational(1, 5) * f).eval(p) == Rational(1));
  // (x - y)(x + y) = x^2 - y^2.
  const PolyCurve a = mono(1, 0, 1) + mono(0, 1, -1);
  const PolyCurve b = mono(1, 0, 1) + mono(0, 1, 1);
  CHECK(a * b == f);
}

TEST_CASE("partial derivatives") {
  // f = x^3 y + 2 y^2.
  const PolyCurve f = mono(3, 1, 1) + mono(0, 2, 2);
  CHECK(f.dx() == mono(2, 1, 3));
  CHECK(f.dy() == mono(3, 0, 1) + mono(0, 1, 4));
  CHECK(PolyCurve::constant(Rational(7)).dx().is_zero());
}

TEST_CASE("primitive form clears content and fixes the leading sign") {
  // -4/6 x^2 + 2/6 y -> 2 x^2 - y after clearing (leading term positive).
  PolyCurve f = PolyCurve::monomial(2, 0, Rational(-4, 6)) +
                PolyCurve::monomial(0, 1, Rational(2, 6));
  const PolyCurve p = f.primitive();
  CHECK(p == mono(2, 0, 2) + mono(0, 1, -1));
  // Idempotent.
  CHECK(p.primitive() == p);
}

TEST_CASE("shifting composes with evaluation") {
  std::mt19937_64 rng(201);
  std::uniform_int_distribution<long> c(-6, 6);
  const PolyCurve f = mono(2, 1, 3) + mono(1, 0, -2) + mono(0, 0, 7);
  const Rational dx(3, 2), dy(-1, 3);
  const PolyCurve g = occ::shifted(f, dx, dy);
  for (int trial = 0; trial < 30; ++trial) {
    const AffinePoint p{Rational(c(rng), 2), Rational(c(rng), 2)};
    CHECK(g.eval(p) == f.eval(AffinePoint{p.x + dx, p.y + dy}));
  }
}

TEST_CASE("exact division recognizes factors and rejects non-factors") {
  const PolyCurve f = diff_of_squares();
  const PolyCurve a = mono(1, 0, 1) + mono(0, 1, -1);
  const auto q = occ::try_divide(f, a);
  REQUIRE(q.has_value());
  CHECK(*q == mono(1, 0, 1) + mono(0, 1, 1));
  CHECK_FALSE(occ::try_divide(f, mono(1, 0, 1) + mono(0, 0, 1)).has_value());
  CHECK_THROWS_AS(occ::try_divide(f, PolyCurve()), std::invalid_argument);
}

TEST_CASE("gcd finds the common factor of two products") {
  const PolyCurve common = mono(1, 0, 1) + mono(0, 1, -1);          // x - y
  const PolyCurve f = common * (mono(1, 0, 1) + mono(0, 0, 1));     // (x-y)(x+1)
  const PolyCurve g = common * (mono(0, 1, 1) + mono(0, 0, 2));     // (x-y)(y+2)
  CHECK(same_up_to_scale(occ::poly_gcd(f, g), common));
  // Coprime inputs have constant gcd.
  CHECK(occ::poly_gcd(mono(1, 0, 1), mono(0, 1, 1)).degree() == 0);
}

TEST_CASE("square-free part drops multiplicities") {
  const PolyCurve a = mono(1, 0, 1) + mono(0, 1, -1);  // x - y
  const PolyCurve b = mono(1, 0, 1) + mono(0, 1, 1);   // x + y
  const PolyCurve f = a * a * b;
  CHECK(same_up_to_scale(occ::squarefree_part(f), a * b));
  CHECK(same_up_to_scale(occ::squarefree_part(a * b), a * b));
}

TEST_CASE("linear factors split off completely") {
  const PolyCurve l1 = mono(1, 0, 1) + mono(0, 0, -1);                   // x - 1
  const PolyCurve l2 = mono(0, 1, 1) + mono(0, 0, -2);                   // y - 2
  const PolyCurve res = mono(2, 0, 1) + mono(0, 2, 1) + mono(0, 0, 1);   // x^2+y^2+1
  const occ::LinearSplit split = occ::strip_linear_factors(l1 * l2 * res);
  CHECK(split.linear_factors.size() == 2);
  CHECK(same_up_to_scale(split.residual, res));
  PolyCurve rebuilt = split.residual;
  for (const PolyCurve& l : split.linear_factors) {
    CHECK(l.degree() == 1);
    rebuilt = rebuilt * l;
  }
  CHECK(same_up_to_scale(rebuilt, l1 * l2 * res));
  // A polynomial with no rational linear factor comes back intact.
  const occ::LinearSplit none = occ::strip_linear_factors(res);
  CHECK(none.linear_factors.empty());
  CHECK(same_up_to_scale(none.residual, res));
}

TEST_CASE("rational roots of univariate polynomials") {
  // (2x - 1)(x + 3) = 2x^2 + 5x - 3, coefficients low-to-high.
  const std::vector<Rational> roots =
      occ::univariate_rational_roots({Rational(-3), Rational(5), Rational(2)});
  REQUIRE(roots.size() == 2);
  CHECK((roots[0] == Rational(1, 2) || roots[1] == Rational(1, 2)));
  CHECK((roots[0] == Rational(-3) || roots[1] == Rational(-3)));
  // x^2 + 1 has no rational root.
  CHECK(occ::univariate_rational_roots({Rational(1), Rational(0), Rational(1)}).empty());
  // Multiplicity collapses: (x - 1)^2 = x^2 - 2x + 1 reports the root once.
  CHECK(occ::univariate_rational_roots({Rational(1), Rational(-2), Rational(1)}).size() == 1);
}

TEST_CASE("exact square roots of rationals") {
  CHECK(occ::exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(occ::exact_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(occ::exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(occ::exact_sqrt(Rational(-1)).has_value());
}

TEST_CASE("homogeneous curves satisfy the Euler relation") {
  // f = x^2 z + 3 x y^2 - z^3, degree 3.
  HomPolyCurve f(3);
  f.add_term(2, 0, Rational(1));
  f.add_term(1, 2, Rational(3));
  f.add_term(0, 0, Rational(-1));
  CHECK(f.degree() == 3);
  CHECK_THROWS_AS(f.add_term(3, 1, Rational(1)), std::invalid_argument);

  const HomPolyCurve fx = f.dx();
  const HomPolyCurve fy = f.dy();
  const HomPolyCurve fz = f.dz();
  CHECK(fx.degree() == 2);

  // x fx + y fy + z fz = 3 f, checked pointwise on a few projective points.
  const ProjPoint samples[] = {
      ProjPoint(Rational(1), Rational(2), Rational(1)),
      ProjPoint(Rational(-3), Rational(1, 2), Rational(1)),
      ProjPoint(Rational(1), Rational(4), Rational(0)),
  };
  for (const ProjPoint& p : samples) {
    const Rational lhs = p.x() * fx.eval(p) + p.y() * fy.eval(p) + p.z() * fz.eval(p);
    CHECK(lhs == Rational(3) * f.eval(p));
  }

  CHECK(f.scaled(Rational(2)).eval(samples[0]) == Rational(2) * f.eval(samples[0]));
  CHECK(f.plus(f.scaled(Rational(-1))).is_zero());
  CHECK_THROWS_AS(f.plus(HomPolyCurve(2)), std::invalid_argument);
}
