#include "occ/curves.hpp"

#include <array>
#include <stdexcept>

namespace occ {

namespace {

// Symmetric matrix of the quadratic form of a conic a*x^2 + b*xy + c*y^2 +
// d*x + e*y + f, acting on homogeneous columns (x, y, z).
std::array<std::array<Rational, 3>, 3> conic_matrix(const PolyCurve& conic) {
  const Rational a = conic.coeff(2, 0), b = conic.coeff(1, 1), c = conic.coeff(0, 2);
  const Rational d = conic.coeff(1, 0), e = conic.coeff(0, 1), f = conic.coeff(0, 0);
  const Rational h(1, 2);
  return {{{a, h * b, h * d}, {h * b, c, h * e}, {h * d, h * e, f}}};
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<Rational, 3> apply3(const std::array<std::array<Rational, 3>, 3>& m,
                               const std::array<Rational, 3>& v) {
  std::array<Rational, 3> r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

// Tangent line at a point of the conic: the polar line of that point.
Line tangent_at(const std::array<std::array<Rational, 3>, 3>& m, const AffinePoint& t) {
  const auto l = apply3(m, {t.x, t.y, Rational(1)});
  return Line(l[0], l[1], -l[2]);
}

}  // namespace

HomPolyCurve homogenize(const PolyCurve& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  HomPolyCurve h(f.degree());
  for (const auto& [key, c] : f.terms()) h.add_term(key.first, key.second, c);
  return h;
}

PolyCurve dehomogenize(const HomPolyCurve& h) {
  if (h.is_zero()) throw std::invalid_argument("cannot dehomogenize the zero polynomial");
  PolyCurve f;
  for (const auto& [key, c] : h.terms()) f.add_term(key.first, key.second, c);
  return f;
}

std::optional<HomPolyCurve> polar_curve(const HomPolyCurve& h, const ProjPoint& p) {
  if (h.is_zero() || h.degree() < 1) {
    throw std::invalid_argument("polar curve needs a curve of degree at least 1");
  }
  const HomPolyCurve d =
      h.dx().scaled(p.x()).plus(h.dy().scaled(p.y())).plus(h.dz().scaled(p.z()));
  if (d.is_zero()) return std::nullopt;
  return d;
}

TangentReport tangent_lines_to_conic(const PolyCurve& conic, const AffinePoint& p) {
  if (conic.degree() != 2) throw std::invalid_argument("tangent machinery needs a conic");
  const auto m = conic_matrix(conic);
  if (det3(m).is_zero()) throw std::invalid_argument("degenerate (reducible) conic");

  TangentReport rep;
  // Tangency points from p are exactly the conic's intersection with the
  // polar line of p.
  const auto pol = apply3(m, {p.x, p.y, Rational(1)});
  const Rational& l0 = pol[0];
  const Rational& l1 = pol[1];
  const Rational& l2 = pol[2];
  if (l0.is_zero() && l1.is_zero()) {
    // Polar line is the line at infinity: no affine tangency point.
    rep.exact = true;
    return rep;
  }

  // Restrict the conic to the polar line and read off the discriminant of
  // the resulting quadratic.  Parametrize by the free coordinate.
  Rational q2, q1, q0;
  const bool solve_for_y = !l1.is_zero();
  {
    const Rational a = conic.coeff(2, 0), b = conic.coeff(1, 1), c = conic.coeff(0, 2);
    const Rational d = conic.coeff(1, 0), e = conic.coeff(0, 1), f = conic.coeff(0, 0);
    if (solve_for_y) {
      // y = -(l0*x + l2)/l1 = s*x + t
      const Rational s = -l0 / l1, t = -l2 / l1;
      q2 = a + b * s + c * s * s;
      q1 = b * t + Rational(2) * c * s * t + d + e * s;
      q0 = c * t * t + e * t + f;
    } else {
      // x = -l2/l0 constant; quadratic in y
      const Rational t = -l2 / l0;
      q2 = c;
      q1 = b * t + e;
      q0 = a * t * t + d * t + f;
    }
  }

  const auto record = [&](const Rational& root) {
    AffinePoint touch = solve_for_y
                            ? AffinePoint{root, (-l0 * root - l2) / l1}
                            : AffinePoint{-l2 / l0, root};
    rep.touch_points.push_back(touch);
    rep.lines.push_back(tangent_at(m, touch));
  };

  if (q2.is_zero()) {
    if (q1.is_zero()) {
      // No affine intersection (q0 != 0; q0 = 0 would mean the polar line
      // lies on the conic, impossible for an irreducible one).
      rep.exact = true;
      return rep;
    }
    rep.count = 1;
    rep.exact = true;
    record(-q0 / q1);
    return rep;
  }

  const Rational disc = q1 * q1 - Rational(4) * q2 * q0;
  const int sign = disc.sign();
  if (sign < 0) {
    rep.exact = true;
    return rep;
  }
  if (sign == 0) {
    rep.count = 1;
    rep.exact = true;
    record(-q1 / (Rational(2) * q2));
    return rep;
  }
  rep.count = 2;
  if (auto root = exact_sqrt(disc)) {
    rep.exact = true;
    record((-q1 + *root) / (Rational(2) * q2));
    record((-q1 - *root) / (Rational(2) * q2));
  }
  return rep;
}

long tangent_count_upper(const PolyCurve& f, const AffinePoint& /*p*/) {
  if (f.is_zero() || f.degree() < 2) {
    throw std::invalid_argument("tangent bound needs degree at least 2");
  }
  const PolyCurve sf = squarefree_part(f);
  const long d = sf.degree();
  const LinearSplit split = strip_linear_factors(sf);
  const long e = std::max(split.residual.degree(), 0);
  return e * (e - 1) + (d - e);
}

bool curve_membership(const PolyCurve& f, const AffinePoint& p) {
  return f.eval(p).is_zero();
}

}  // namespace occ
