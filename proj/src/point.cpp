#include "occ/point.hpp"

#include "occ/pointset.hpp"

#include <stdexcept>
#include <unordered_set>

namespace occ {

ProjPoint::ProjPoint(Rational x, Rational y, Rational z)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  // Scale so the last nonzero coordinate becomes 1; this is the unique
  // representative of the projective class, so == is structural.
  if (!z_.is_zero()) {
    x_ /= z_;
    y_ /= z_;
    z_ = Rational(1);
  } else if (!y_.is_zero()) {
    x_ /= y_;
    y_ = Rational(1);
  } else if (!x_.is_zero()) {
    x_ = Rational(1);
  } else {
    throw std::invalid_argument("projective point (0 : 0 : 0)");
  }
}

ProjTransform::ProjTransform(const std::array<std::array<Rational, 3>, 3>& m) : m_(m) {
  det_ = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det_.is_zero()) throw std::invalid_argument("singular projective transform");
}

ProjPoint ProjTransform::apply(const ProjPoint& p) const {
  Rational u = m_[0][0] * p.x() + m_[0][1] * p.y() + m_[0][2] * p.z();
  Rational v = m_[1][0] * p.x() + m_[1][1] * p.y() + m_[1][2] * p.z();
  Rational w = m_[2][0] * p.x() + m_[2][1] * p.y() + m_[2][2] * p.z();
  return ProjPoint(std::move(u), std::move(v), std::move(w));
}

std::vector<ProjPoint> PointSet::projective() const {
  std::vector<ProjPoint> out;
  out.reserve(size());
  for (const auto& p : affine) out.push_back(ProjPoint::from_affine(p));
  for (const auto& d : infinity) out.push_back(d);
  return out;
}

bool PointSet::contains(const ProjPoint& p) const {
  if (p.is_infinite()) {
    for (const auto& d : infinity)
      if (d == p) return true;
    return false;
  }
  const AffinePoint a = p.to_affine();
  for (const auto& q : affine)
    if (q == a) return true;
  return false;
}

void PointSet::validate() const {
  std::unordered_set<ProjPoint, ProjPointHash> seen;
  for (const auto& p : affine) {
    if (!seen.insert(ProjPoint::from_affine(p)).second) {
      throw std::invalid_argument("duplicate point in set");
    }
  }
  for (const auto& d : infinity) {
    if (!d.is_infinite()) throw std::invalid_argument("finite point listed as infinite");
    if (!seen.insert(d).second) throw std::invalid_argument("duplicate point in set");
  }
}

PointSet apply_transform(const ProjTransform& t, const PointSet& ps) {
  PointSet out;
  for (const ProjPoint& p : ps.projective()) {
    ProjPoint img = t.apply(p);
    if (img.is_infinite()) {
      out.infinity.push_back(std::move(img));
    } else {
      out.affine.push_back(img.to_affine());
    }
  }
  out.validate();
  return out;
}

}  // namespace occ
