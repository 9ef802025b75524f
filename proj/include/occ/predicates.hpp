// Exact sign predicates on rational points.
#pragma once

#include "occ/point.hpp"

namespace occ {

// Twice the signed area of the triangle p, q, r.
Rational orient_value(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

// Sign of orient_value: +1 counter-clockwise, -1 clockwise, 0 collinear.
int orient(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

bool collinear(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

// Determinant of the 4x4 lifted matrix |x^2+y^2  x  y  1| over the four
// points.  Zero exactly when the points lie on a common circle or line.
Rational cocircular_value(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r,
                          const AffinePoint& s);

// Sign of cocircular_value: 0 iff the four points lie on a common circle or
// common line.
int cocircular(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r,
               const AffinePoint& s);

Rational dist_squared(const AffinePoint& p, const AffinePoint& q);

}  // namespace occ
