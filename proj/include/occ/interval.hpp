// Certified interval arithmetic over MPFR with directed rounding.  Used to
// decide the incidences that integer symmetry rules leave open; an interval
// sign is trusted only when the interval excludes zero.
#pragma once

#include "occ/rational.hpp"

#include <mpfr.h>

#include <string>

namespace occ {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& r, mpfr_prec_t prec);
  // Enclosures of cos(pi * r) and sin(pi * r).
  static Interval cos_pi_times(const Rational& r, mpfr_prec_t prec);
  static Interval sin_pi_times(const Rational& r, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  // +1 when the whole interval is positive, -1 when negative, 0 when the
  // interval touches or straddles zero (sign not certified).
  int sign() const;
  bool is_point() const;

  // Exact dyadic endpoints.
  Rational lo_rational() const;
  Rational hi_rational() const;
  double width() const;
  double approx() const;  // midpoint, for rendering only
  std::string str() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;
  // Reciprocal; requires a certified sign (the interval must exclude zero).
  Interval inverse() const;
  // Interval times an exact rational scalar.
  Interval scaled(const Rational& r) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

struct IntervalPoint {
  Interval x, y;
};

// Interval versions of the kernel determinants.
Interval orient_box(const IntervalPoint& p, const IntervalPoint& q, const IntervalPoint& r);
Interval cocircular_box(const IntervalPoint& p, const IntervalPoint& q, const IntervalPoint& r,
                        const IntervalPoint& s);

}  // namespace occ
