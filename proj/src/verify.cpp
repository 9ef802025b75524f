#include "occ/verify.hpp"

#include "occ/configs.hpp"
#include "occ/counting.hpp"
#include "occ/curves.hpp"
#include "occ/inversion.hpp"
#include "occ/io.hpp"

#include <sstream>

namespace occ {

namespace {

VerifyCheck make_check(std::string name, std::string expected, std::string actual) {
  VerifyCheck c;
  c.check = std::move(name);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.pass = c.expected == c.actual;
  return c;
}

VerifyCheck long_check(std::string name, long expected, long actual) {
  return make_check(std::move(name), std::to_string(expected), std::to_string(actual));
}

}  // namespace

std::vector<VerifyCheck> verify_constructions() {
  std::vector<VerifyCheck> out;
  const Rational ratio(5, 7);
  for (int n : {8, 10, 12, 14, 16, 20}) {
    const SymmetricReport r = count_symmetric(make_even_construction(n, ratio));
    const long half = n / 2;
    const long claimed = half * (half - 1);  // 2 * C(n/2, 2)
    out.push_back(long_check("even_n" + std::to_string(n) + "_oc", claimed,
                             r.circles ? r.circles->ordinary : -1));
  }
  for (int m = 3; m <= 10; ++m) {
    const SymmetricReport r = count_symmetric(make_boroczky(m));
    out.push_back(long_check("boroczky_m" + std::to_string(m) + "_ol", m, r.ordinary_lines));
  }
  const long odd_golden[4][2] = {{9, 22}, {11, 30}, {13, 51}, {15, 63}};
  for (const auto& [n, oc] : odd_golden) {
    const SymmetricReport r =
        count_symmetric(make_odd_construction(static_cast<int>(n), ratio, SymPos{1, 0}));
    out.push_back(long_check("odd_n" + std::to_string(n) + "_oc", oc,
                             r.circles ? r.circles->ordinary : -1));
  }
  return out;
}

std::vector<VerifyCheck> verify_inversion() {
  std::vector<VerifyCheck> out;

  // Applying the same inversion twice fixes every point off the center.
  {
    const PointSet ps = seeded_random_points(7, 1000);
    const InversionMap inv{AffinePoint{Rational(20001), Rational(13)}};
    const PointSet twice = invert_point_set(inv, invert_point_set(inv, ps));
    out.push_back(make_check("involution_n1000", "fixed",
                             twice.affine == ps.affine ? "fixed" : "moved"));
  }

  const InversionMap origin{AffinePoint{Rational(0), Rational(0)}};

  // Line avoiding the center: x = 1 maps to x^2 + y^2 - x = 0.
  {
    const GeneralizedCircle img =
        invert_generalized_circle(origin, GeneralizedCircle(Line(Rational(1), Rational(0), Rational(1))));
    const GeneralizedCircle want(Circle(Rational(-1), Rational(0), Rational(0)));
    out.push_back(make_check("line_avoiding_to_circle", want.str(), img.str()));
  }

  // Line through the center is fixed as a set: y = 0.
  {
    const GeneralizedCircle l(Line(Rational(0), Rational(1), Rational(0)));
    out.push_back(make_check("line_through_center_fixed", l.str(),
                             invert_generalized_circle(origin, l).str()));
  }

  // Circle through the center: x^2 + y^2 - 2x = 0 maps to the line x = 1/2.
  {
    const GeneralizedCircle img =
        invert_generalized_circle(origin, GeneralizedCircle(Circle(Rational(-2), Rational(0), Rational(0))));
    const GeneralizedCircle want(Line(Rational(1), Rational(0), Rational(1, 2)));
    out.push_back(make_check("circle_through_center_to_line", want.str(), img.str()));
  }

  // Circle avoiding the center: the unit circle is fixed as a set.
  {
    const GeneralizedCircle c(Circle(Rational(0), Rational(0), Rational(-1)));
    out.push_back(make_check("unit_circle_fixed", c.str(),
                             invert_generalized_circle(origin, c).str()));
  }

  // Curve-level inversion of the line x - 1 = 0.
  {
    PolyCurve f;
    f.add_term(1, 0, Rational(1));
    f.add_term(0, 0, Rational(-1));
    PolyCurve want;
    want.add_term(2, 0, Rational(1));
    want.add_term(0, 2, Rational(1));
    want.add_term(1, 0, Rational(-1));
    out.push_back(make_check("curve_line_to_circle", want.primitive().str(),
                             invert_curve(origin, f).str()));
  }

  return out;
}

std::vector<VerifyCheck> verify_curves() {
  std::vector<VerifyCheck> out;

  PolyCurve unit;  // x^2 + y^2 - 1
  unit.add_term(2, 0, Rational(1));
  unit.add_term(0, 2, Rational(1));
  unit.add_term(0, 0, Rational(-1));

  // Polar of the unit circle at [2:0:1] is 4x - 2z.
  {
    const auto polar = polar_curve(homogenize(unit), ProjPoint::from_affine(AffinePoint{
                                                         Rational(2), Rational(0)}));
    HomPolyCurve want(1);
    want.add_term(1, 0, Rational(4));
    want.add_term(0, 0, Rational(-2));
    out.push_back(make_check("polar_conic_at_2_0_1", want.str(),
                             polar ? polar->str() : std::string("vanishes")));
  }

  // Tangent counts from outside / on / inside the unit circle.
  out.push_back(long_check("tangents_outside", 2,
                           tangent_lines_to_conic(unit, AffinePoint{Rational(2), Rational(0)}).count));
  out.push_back(long_check("tangents_on_curve", 1,
                           tangent_lines_to_conic(unit, AffinePoint{Rational(1), Rational(0)}).count));
  out.push_back(long_check("tangents_inside", 0,
                           tangent_lines_to_conic(unit, AffinePoint{Rational(0), Rational(0)}).count));

  // From (5/4, 0) the tangency points are rational: (4/5, +-3/5), and they
  // lie on both the conic and its polar curve.
  {
    const AffinePoint p{Rational(5, 4), Rational(0)};
    const TangentReport rep = tangent_lines_to_conic(unit, p);
    bool ok = rep.count == 2 && rep.exact && rep.touch_points.size() == 2;
    if (ok) {
      const auto polar = polar_curve(homogenize(unit), ProjPoint::from_affine(p));
      const PolyCurve polar_affine = dehomogenize(*polar);
      for (const AffinePoint& t : rep.touch_points)
        ok = ok && curve_membership(unit, t) && curve_membership(polar_affine, t);
    }
    out.push_back(make_check("tangency_points_rational", "on_both", ok ? "on_both" : "off"));
  }

  // Degree-based upper bounds: conic 2, irreducible cubic 3*2 = 6.
  out.push_back(long_check("tangent_bound_conic", 2,
                           tangent_count_upper(unit, AffinePoint{Rational(5), Rational(7)})));
  {
    PolyCurve cubic;  // x^3 + y^3 - 1, no rational linear factor
    cubic.add_term(3, 0, Rational(1));
    cubic.add_term(0, 3, Rational(1));
    cubic.add_term(0, 0, Rational(-1));
    out.push_back(long_check("tangent_bound_cubic", 6,
                             tangent_count_upper(cubic, AffinePoint{Rational(2), Rational(3)})));
  }

  return out;
}

std::vector<VerifyCheck> verify_theorem34() {
  // Deviation |ol_q - main term| of the six modified constructions, frozen
  // at m in {10, 15, 20}.
  struct Row {
    TheoremType type;
    char tag;
    int m;
    const char* deviation;
  };
  const Row rows[] = {
      {TheoremType::kA, 'a', 10, "1/2"},  {TheoremType::kA, 'a', 15, "1/2"},
      {TheoremType::kA, 'a', 20, "1/2"},  {TheoremType::kB, 'b', 10, "9/4"},
      {TheoremType::kB, 'b', 15, "3/4"},  {TheoremType::kB, 'b', 20, "9/4"},
      {TheoremType::kC, 'c', 10, "3/4"},  {TheoremType::kC, 'c', 15, "83/4"},
      {TheoremType::kC, 'c', 20, "3/4"},  {TheoremType::kD, 'd', 10, "0"},
      {TheoremType::kD, 'd', 15, "0"},    {TheoremType::kD, 'd', 20, "0"},
      {TheoremType::kE, 'e', 10, "3/2"},  {TheoremType::kE, 'e', 15, "1"},
      {TheoremType::kE, 'e', 20, "3/2"},  {TheoremType::kF, 'f', 10, "1"},
      {TheoremType::kF, 'f', 15, "41/2"}, {TheoremType::kF, 'f', 20, "1"},
  };
  std::vector<VerifyCheck> out;
  for (const Row& row : rows) {
    const TheoremReport rep = theorem_check_ol(row.type, row.m);
    std::ostringstream name;
    name << "thm34_" << row.tag << "_m" << row.m << "_dev";
    out.push_back(make_check(name.str(), row.deviation, rep.deviation.str()));
  }
  return out;
}

std::vector<VerifyCheck> verify_all() {
  std::vector<VerifyCheck> out = verify_constructions();
  for (auto&& suite : {verify_inversion(), verify_curves(), verify_theorem34()})
    out.insert(out.end(), suite.begin(), suite.end());
  return out;
}

bool all_pass(const std::vector<VerifyCheck>& checks) {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace occ
