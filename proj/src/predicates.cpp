#include "occ/predicates.hpp"

namespace occ {

Rational orient_value(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

int orient(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  return orient_value(p, q, r).sign();
}

bool collinear(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  return orient(p, q, r) == 0;
}

Rational cocircular_value(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r,
                          const AffinePoint& s) {
  // Translate by p, which kills one row and reduces the 4x4 lifted
  // determinant to a 3x3 in the differences.  Row i is
  // (|v_i|^2, v_i.x, v_i.y) for v_i = q - p, r - p, s - p.
  const Rational qx = q.x - p.x, qy = q.y - p.y;
  const Rational rx = r.x - p.x, ry = r.y - p.y;
  const Rational sx = s.x - p.x, sy = s.y - p.y;
  const Rational ql = qx * qx + qy * qy;
  const Rational rl = rx * rx + ry * ry;
  const Rational sl = sx * sx + sy * sy;
  // The reduction flips the sign once (cofactor expansion along the
  // constant column), so negate to report the 4x4 determinant itself.
  const Rational det3 =
      ql * (rx * sy - ry * sx) - rl * (qx * sy - qy * sx) + sl * (qx * ry - qy * rx);
  return -det3;
}

int cocircular(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r,
               const AffinePoint& s) {
  return cocircular_value(p, q, r, s).sign();
}

Rational dist_squared(const AffinePoint& p, const AffinePoint& q) {
  const Rational dx = q.x - p.x, dy = q.y - p.y;
  return dx * dx + dy * dy;
}

}  // namespace occ
