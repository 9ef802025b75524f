// Affine and projective points, and projective transforms.
#pragma once

#include "occ/rational.hpp"

#include <array>
#include <stdexcept>

namespace occ {

struct AffinePoint {
  Rational x, y;

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const AffinePoint& a, const AffinePoint& b) { return !(a == b); }
};

struct AffinePointHash {
  std::size_t operator()(const AffinePoint& p) const {
    return hash_mix(hash_rational(p.x), hash_rational(p.y));
  }
};

// Homogeneous coordinates [x : y : z], kept canonical: the last nonzero
// coordinate is scaled to 1.  z = 0 marks a point at infinity (a direction).
class ProjPoint {
 public:
  ProjPoint() : x_(0), y_(0), z_(1) {}
  ProjPoint(Rational x, Rational y, Rational z);

  static ProjPoint from_affine(const AffinePoint& p) { return ProjPoint(p.x, p.y, Rational(1)); }
  static ProjPoint direction(const Rational& dx, const Rational& dy) {
    return ProjPoint(dx, dy, Rational(0));
  }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_infinite() const { return z_.is_zero(); }
  AffinePoint to_affine() const {
    if (is_infinite()) throw std::invalid_argument("point at infinity has no affine form");
    return AffinePoint{x_, y_};
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  Rational x_, y_, z_;
};

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const {
    return hash_mix(hash_mix(hash_rational(p.x()), hash_rational(p.y())), hash_rational(p.z()));
  }
};

// 3x3 nonsingular rational matrix acting on homogeneous coordinates.
class ProjTransform {
 public:
  explicit ProjTransform(const std::array<std::array<Rational, 3>, 3>& m);

  ProjPoint apply(const ProjPoint& p) const;
  const Rational& at(int r, int c) const { return m_[r][c]; }
  const Rational& det() const { return det_; }

 private:
  std::array<std::array<Rational, 3>, 3> m_;
  Rational det_;
};

}  // namespace occ
