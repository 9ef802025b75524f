#include "occ/inversion.hpp"

#include <stdexcept>

namespace occ {

AffinePoint invert_point(const InversionMap& inv, const AffinePoint& q) {
  const Rational dx = q.x - inv.center.x, dy = q.y - inv.center.y;
  const Rational rho2 = dx * dx + dy * dy;
  if (rho2.is_zero()) throw std::invalid_argument("inversion undefined at its center");
  return AffinePoint{inv.center.x + dx / rho2, inv.center.y + dy / rho2};
}

PointSet invert_point_set(const InversionMap& inv, const PointSet& ps) {
  if (!ps.all_affine()) {
    throw std::invalid_argument("point set with infinite members cannot be inverted");
  }
  PointSet out;
  out.affine.reserve(ps.affine.size());
  for (const auto& p : ps.affine) {
    if (p == inv.center) throw std::invalid_argument("inversion center belongs to the set");
    out.affine.push_back(invert_point(inv, p));
  }
  return out;
}

GeneralizedCircle invert_generalized_circle(const InversionMap& inv, const GeneralizedCircle& g) {
  const Rational& px = inv.center.x;
  const Rational& py = inv.center.y;
  if (g.is_line()) {
    const Line& l = g.line();
    const Rational a(l.a()), b(l.b());
    // In coordinates translated so the center sits at the origin the line is
    // a*u + b*v = c'.
    const Rational cp = Rational(l.c()) - a * px - b * py;
    if (cp.is_zero()) return g;  // line through the center maps to itself
    // Image: u^2 + v^2 - (a/c')u - (b/c')v = 0, translated back.
    const Rational d = -a / cp, e = -b / cp;
    return GeneralizedCircle(Circle(d - Rational(2) * px, e - Rational(2) * py,
                                    px * px + py * py - d * px - e * py));
  }
  const Circle& c = g.circle();
  // Translated circle u^2 + v^2 + d'u + e'v + f' = 0; f' is the value of the
  // circle polynomial at the center.
  const Rational dp = c.d() + Rational(2) * px;
  const Rational ep = c.e() + Rational(2) * py;
  const Rational fp = c.eval(inv.center);
  if (fp.is_zero()) {
    // Circle through the center: image is the line d'u + e'v = -1.
    return GeneralizedCircle(Line(dp, ep, dp * px + ep * py - Rational(1)));
  }
  const Rational d2 = dp / fp, e2 = ep / fp, f2 = Rational(1) / fp;
  return GeneralizedCircle(Circle(d2 - Rational(2) * px, e2 - Rational(2) * py,
                                  px * px + py * py - d2 * px - e2 * py + f2));
}

PolyCurve invert_curve(const InversionMap& inv, const PolyCurve& f, int& clearing_exponent) {
  if (f.is_zero()) throw std::invalid_argument("cannot invert the zero curve");
  // Translate the center to the origin, substitute
  //   (x, y) -> (x, y) / (x^2 + y^2)
  // and clear denominators with (x^2 + y^2)^d, then remove any surplus powers
  // so the clearing exponent is minimal.
  const PolyCurve g0 = shifted(f, inv.center.x, inv.center.y);
  const int d = g0.degree();
  PolyCurve rho2;
  rho2.add_term(2, 0, Rational(1));
  rho2.add_term(0, 2, Rational(1));
  std::vector<PolyCurve> rho_pow(d + 1);
  rho_pow[0] = PolyCurve::constant(Rational(1));
  for (int k = 1; k <= d; ++k) rho_pow[k] = rho_pow[k - 1] * rho2;
  PolyCurve img;
  for (const auto& [key, c] : g0.terms()) {
    const auto [i, j] = key;
    img = img + c * (PolyCurve::monomial(i, j, Rational(1)) * rho_pow[d - i - j]);
  }
  clearing_exponent = d;
  while (true) {
    auto q = try_divide(img, rho2);
    if (!q) break;
    img = std::move(*q);
    --clearing_exponent;
  }
  return shifted(img, -inv.center.x, -inv.center.y).primitive();
}

PolyCurve invert_curve(const InversionMap& inv, const PolyCurve& f) {
  int k;
  return invert_curve(inv, f, k);
}

bool center_on_image(const InversionMap& inv, const PolyCurve& conic) {
  if (conic.degree() != 2) throw std::invalid_argument("conic classification needs degree 2");
  if (conic.eval(inv.center).is_zero()) {
    throw std::invalid_argument("conic passes through the inversion center");
  }
  // The image contains the center exactly when the conic reaches the line at
  // infinity in a real direction, i.e. when the quadratic part has a real
  // zero: discriminant b^2 - 4ac >= 0 (parabola or hyperbola).
  const Rational a = conic.coeff(2, 0);
  const Rational b = conic.coeff(1, 1);
  const Rational c = conic.coeff(0, 2);
  return (b * b - Rational(4) * a * c).sign() >= 0;
}

}  // namespace occ
