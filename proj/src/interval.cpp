#include "occ/interval.hpp"

#include <sstream>
#include <stdexcept>

namespace occ {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, r.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, r.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

namespace {

// Enclosure of pi * r.
void pi_times(const Rational& r, mpfr_prec_t prec, mpfr_t theta_lo, mpfr_t theta_hi) {
  mpfr_t pi_lo, pi_hi;
  mpfr_init2(pi_lo, prec);
  mpfr_init2(pi_hi, prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  if (r.sign() >= 0) {
    mpfr_mul_q(theta_lo, pi_lo, r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(theta_hi, pi_hi, r.raw().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(theta_lo, pi_hi, r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(theta_hi, pi_lo, r.raw().get_mpq_t(), MPFR_RNDU);
  }
  mpfr_clear(pi_lo);
  mpfr_clear(pi_hi);
}

}  // namespace

// cos and sin are 1-Lipschitz, so the image of [a, b] is contained in the
// endpoint values widened by the argument width.  That keeps the enclosure
// rigorous without locating interior extrema; the slack is a few ulps.
Interval Interval::cos_pi_times(const Rational& r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_t tlo, thi, clo1, clo2, w;
  mpfr_inits2(prec, tlo, thi, clo1, clo2, w, static_cast<mpfr_ptr>(nullptr));
  pi_times(r, prec, tlo, thi);
  mpfr_sub(w, thi, tlo, MPFR_RNDU);
  mpfr_cos(clo1, tlo, MPFR_RNDD);
  mpfr_cos(clo2, thi, MPFR_RNDD);
  mpfr_min(out.lo_, clo1, clo2, MPFR_RNDD);
  mpfr_sub(out.lo_, out.lo_, w, MPFR_RNDD);
  mpfr_cos(clo1, tlo, MPFR_RNDU);
  mpfr_cos(clo2, thi, MPFR_RNDU);
  mpfr_max(out.hi_, clo1, clo2, MPFR_RNDU);
  mpfr_add(out.hi_, out.hi_, w, MPFR_RNDU);
  if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
  mpfr_clears(tlo, thi, clo1, clo2, w, static_cast<mpfr_ptr>(nullptr));
  return out;
}

Interval Interval::sin_pi_times(const Rational& r, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_t tlo, thi, s1, s2, w;
  mpfr_inits2(prec, tlo, thi, s1, s2, w, static_cast<mpfr_ptr>(nullptr));
  pi_times(r, prec, tlo, thi);
  mpfr_sub(w, thi, tlo, MPFR_RNDU);
  mpfr_sin(s1, tlo, MPFR_RNDD);
  mpfr_sin(s2, thi, MPFR_RNDD);
  mpfr_min(out.lo_, s1, s2, MPFR_RNDD);
  mpfr_sub(out.lo_, out.lo_, w, MPFR_RNDD);
  mpfr_sin(s1, tlo, MPFR_RNDU);
  mpfr_sin(s2, thi, MPFR_RNDU);
  mpfr_max(out.hi_, s1, s2, MPFR_RNDU);
  mpfr_add(out.hi_, out.hi_, w, MPFR_RNDU);
  if (mpfr_cmp_si(out.lo_, -1) < 0) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(out.hi_, 1) > 0) mpfr_set_si(out.hi_, 1, MPFR_RNDU);
  mpfr_clears(tlo, thi, s1, s2, w, static_cast<mpfr_ptr>(nullptr));
  return out;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

Rational Interval::lo_rational() const {
  if (!mpfr_number_p(lo_)) throw std::range_error("interval endpoint is not finite");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return Rational(q);
}

Rational Interval::hi_rational() const {
  if (!mpfr_number_p(hi_)) throw std::range_error("interval endpoint is not finite");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return Rational(q);
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::approx() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << "[" << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << "]";
  return os.str();
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (const auto& x : as) {
    for (const auto& y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval Interval::operator-() const {
  Interval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval Interval::inverse() const {
  if (sign() == 0) throw std::domain_error("interval reciprocal straddles zero");
  Interval out(prec_);
  // Reciprocal is decreasing on an interval of constant sign.
  mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.inverse(); }

Interval Interval::scaled(const Rational& r) const {
  Interval out(prec_);
  if (r.sign() >= 0) {
    mpfr_mul_q(out.lo_, lo_, r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi_, hi_, r.raw().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(out.lo_, hi_, r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi_, lo_, r.raw().get_mpq_t(), MPFR_RNDU);
  }
  return out;
}

Interval orient_box(const IntervalPoint& p, const IntervalPoint& q, const IntervalPoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Interval cocircular_box(const IntervalPoint& p, const IntervalPoint& q, const IntervalPoint& r,
                        const IntervalPoint& s) {
  const Interval qx = q.x - p.x, qy = q.y - p.y;
  const Interval rx = r.x - p.x, ry = r.y - p.y;
  const Interval sx = s.x - p.x, sy = s.y - p.y;
  const Interval ql = qx * qx + qy * qy;
  const Interval rl = rx * rx + ry * ry;
  const Interval sl = sx * sx + sy * sy;
  const Interval det3 =
      ql * (rx * sy - ry * sx) - rl * (qx * sy - qy * sx) + sl * (qx * ry - qy * rx);
  return -det3;
}

}  // namespace occ
