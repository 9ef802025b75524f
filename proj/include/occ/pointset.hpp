// Point sets mixing affine points and directions at infinity.
#pragma once

#include "occ/point.hpp"

#include <cstddef>
#include <vector>

namespace occ {

struct PointSet {
  std::vector<AffinePoint> affine;
  // Directions, stored as canonical projective points with z = 0.
  std::vector<ProjPoint> infinity;

  std::size_t size() const { return affine.size() + infinity.size(); }
  bool all_affine() const { return infinity.empty(); }

  // All members as projective points, affine part first.
  std::vector<ProjPoint> projective() const;

  bool contains(const ProjPoint& p) const;

  // Throws if a duplicate member or a finite "infinity" entry is present.
  void validate() const;
};

PointSet apply_transform(const ProjTransform& t, const PointSet& ps);

}  // namespace occ
