// Plane algebraic curves: homogenization, polar curves, and tangent-line
// machinery.
#pragma once

#include "occ/carrier.hpp"
#include "occ/poly.hpp"

#include <optional>
#include <vector>

namespace occ {

HomPolyCurve homogenize(const PolyCurve& f);
// The z = 1 chart.
PolyCurve dehomogenize(const HomPolyCurve& h);

// D_p(F) = p1*dF/dx + p2*dF/dy + p3*dF/dz; empty when it vanishes
// identically.  Requires deg(F) >= 1.
std::optional<HomPolyCurve> polar_curve(const HomPolyCurve& h, const ProjPoint& p);

// Tangent lines from p to an irreducible conic.  `lines` and `touch_points`
// are filled only when the tangency data is rational; `count` is certified
// either way via the discriminant of the conic restricted to the polar line.
struct TangentReport {
  int count = 0;
  bool exact = false;
  std::vector<Line> lines;
  std::vector<AffinePoint> touch_points;
};
TangentReport tangent_lines_to_conic(const PolyCurve& conic, const AffinePoint& p);

// Upper bound on the number of lines through p tangent to (or contained in)
// V(f): e(e-1) + (d - e), where e is the degree left after splitting off the
// d - e rational linear factors of the square-free part.
long tangent_count_upper(const PolyCurve& f, const AffinePoint& p);

// Exact membership test f(p) = 0.
bool curve_membership(const PolyCurve& f, const AffinePoint& p);

}  // namespace occ
