// Carriers: lines and circles in canonical exact form.
#pragma once

#include "occ/point.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace occ {

// a*x + b*y = c with integer coprime coefficients, (a, b) != (0, 0),
// and the first nonzero of (a, b) positive.  The canonical form makes
// equality and hashing structural.
class Line {
 public:
  Line(const Rational& a, const Rational& b, const Rational& c);

  static Line through(const AffinePoint& p, const AffinePoint& q);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }

  bool contains(const AffinePoint& p) const;
  // Direction of the line as a canonical projective point at infinity.
  ProjPoint direction() const;

  std::string str() const;

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator!=(const Line& l, const Line& r) { return !(l == r); }
  friend bool operator<(const Line& l, const Line& r) {
    if (int s = cmp(l.a_, r.a_)) return s < 0;
    if (int s = cmp(l.b_, r.b_)) return s < 0;
    return cmp(l.c_, r.c_) < 0;
  }

 private:
  mpz_class a_, b_, c_;
};

struct LineHash {
  std::size_t operator()(const Line& l) const {
    return hash_mix(hash_mix(hash_mpz(l.a()), hash_mpz(l.b())), hash_mpz(l.c()));
  }
};

// x^2 + y^2 + d*x + e*y + f = 0 with rational d, e, f and positive squared
// radius (d^2 + e^2 - 4f > 0).  Leading coefficient pinned to 1 makes the
// representation unique.
class Circle {
 public:
  Circle(const Rational& d, const Rational& e, const Rational& f);

  static Circle through(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

  const Rational& d() const { return d_; }
  const Rational& e() const { return e_; }
  const Rational& f() const { return f_; }

  AffinePoint center() const { return AffinePoint{-d_ / Rational(2), -e_ / Rational(2)}; }
  Rational radius_squared() const;
  bool contains(const AffinePoint& p) const;
  // Value of x^2 + y^2 + d x + e y + f at p (sign classifies in/on/out).
  Rational eval(const AffinePoint& p) const;

  std::string str() const;

  friend bool operator==(const Circle& l, const Circle& r) {
    return l.d_ == r.d_ && l.e_ == r.e_ && l.f_ == r.f_;
  }
  friend bool operator!=(const Circle& l, const Circle& r) { return !(l == r); }

 private:
  Rational d_, e_, f_;
};

struct CircleHash {
  std::size_t operator()(const Circle& c) const {
    return hash_mix(hash_mix(hash_rational(c.d()), hash_rational(c.e())), hash_rational(c.f()));
  }
};

// Tagged union of the two carrier kinds inversion exchanges.
class GeneralizedCircle {
 public:
  enum class Kind { kLine, kCircle };

  explicit GeneralizedCircle(Line l) : kind_(Kind::kLine), line_(std::move(l)) {}
  explicit GeneralizedCircle(Circle c) : kind_(Kind::kCircle), circle_(std::move(c)) {}

  Kind kind() const { return kind_; }
  bool is_line() const { return kind_ == Kind::kLine; }
  bool is_circle() const { return kind_ == Kind::kCircle; }

  const Line& line() const;
  const Circle& circle() const;

  bool contains(const AffinePoint& p) const;
  std::string str() const;

  friend bool operator==(const GeneralizedCircle& a, const GeneralizedCircle& b);
  friend bool operator!=(const GeneralizedCircle& a, const GeneralizedCircle& b) {
    return !(a == b);
  }

 private:
  Kind kind_;
  // Exactly one of these is engaged, decided by kind_.  Both kept as
  // optionals-by-hand to avoid dragging <variant> into every include site.
  std::optional<Line> line_;
  std::optional<Circle> circle_;
};

// A line of the projective plane: either an affine line or the line at
// infinity (z = 0), which carries the direction points.
class ExtendedLine {
 public:
  explicit ExtendedLine(Line l) : line_(std::move(l)) {}
  static ExtendedLine at_infinity() { return ExtendedLine(); }

  bool is_at_infinity() const { return !line_.has_value(); }
  const Line& line() const {
    if (!line_) throw std::logic_error("line at infinity has no affine coefficients");
    return *line_;
  }

  bool contains(const ProjPoint& p) const;
  std::string str() const { return line_ ? line_->str() : std::string("z = 0"); }

  friend bool operator==(const ExtendedLine& a, const ExtendedLine& b) {
    if (a.is_at_infinity() != b.is_at_infinity()) return false;
    return a.is_at_infinity() || *a.line_ == *b.line_;
  }
  friend bool operator!=(const ExtendedLine& a, const ExtendedLine& b) { return !(a == b); }

 private:
  ExtendedLine() = default;
  std::optional<Line> line_;
};

struct ExtendedLineHash {
  std::size_t operator()(const ExtendedLine& l) const {
    return l.is_at_infinity() ? 0x9d8c3f2b5a471e60ull : LineHash{}(l.line());
  }
};

// Line through two distinct projective points; two points at infinity span
// the line at infinity.
ExtendedLine line_through(const ProjPoint& p, const ProjPoint& q);

// Carrier spanned by three distinct affine points: the circle through them,
// or their common line when collinear.
GeneralizedCircle circle_through(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r);

}  // namespace occ
