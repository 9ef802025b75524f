// Unit-radius circle inversion: points, line/circle carriers, and algebraic
// curves.
#pragma once

#include "occ/carrier.hpp"
#include "occ/pointset.hpp"
#include "occ/poly.hpp"

namespace occ {

// The inversion q |-> center + (q - center) / |q - center|^2.
struct InversionMap {
  AffinePoint center;
};

AffinePoint invert_point(const InversionMap& inv, const AffinePoint& q);

// Inverts every member; the set must be all-affine and must not contain the
// center.
PointSet invert_point_set(const InversionMap& inv, const PointSet& ps);

// Realizes the exchange: line through center -> itself; line avoiding center
// -> circle through center; circle through center -> line avoiding center;
// circle avoiding center -> circle avoiding center.
GeneralizedCircle invert_generalized_circle(const InversionMap& inv, const GeneralizedCircle& g);

// Image curve of V(f): substitute the inversion formula (center translated to
// the origin) and clear denominators with the minimal power of x^2 + y^2.
// The result is primitive, of degree at most 2*deg(f).
PolyCurve invert_curve(const InversionMap& inv, const PolyCurve& f);
// Same, also reporting the clearing exponent k <= deg(f) that was used.
PolyCurve invert_curve(const InversionMap& inv, const PolyCurve& f, int& clearing_exponent);

// For a conic not through the center: does the image curve pass through the
// center?  Decided by the sign of the discriminant of the quadratic part
// (parabola/hyperbola: yes; ellipse: no).
bool center_on_image(const InversionMap& inv, const PolyCurve& conic);

}  // namespace occ
