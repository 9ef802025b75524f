#include "occ/carrier.hpp"

#include "occ/predicates.hpp"

#include <sstream>

namespace occ {

namespace {

// Scale (a, b, c) from rationals to coprime integers with the first nonzero
// of (a, b) positive.
void canonical_triple(const Rational& a, const Rational& b, const Rational& c, mpz_class& za,
                      mpz_class& zb, mpz_class& zc) {
  mpz_class lcm_den = 1;
  mpz_lcm(lcm_den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  za = a.num() * (lcm_den / a.den());
  zb = b.num() * (lcm_den / b.den());
  zc = c.num() * (lcm_den / c.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zc.get_mpz_t());
  if (g != 0) {
    za /= g;
    zb /= g;
    zc /= g;
  }
  const int lead = (sgn(za) != 0) ? sgn(za) : sgn(zb);
  if (lead < 0) {
    za = -za;
    zb = -zb;
    zc = -zc;
  }
}

}  // namespace

Line::Line(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("degenerate line: a = b = 0");
  canonical_triple(a, b, c, a_, b_, c_);
}

Line Line::through(const AffinePoint& p, const AffinePoint& q) {
  if (p == q) throw std::invalid_argument("line through a repeated point");
  // (y_q - y_p) x - (x_q - x_p) y = x_p y_q - x_q y_p
  return Line(q.y - p.y, p.x - q.x, p.x * q.y - q.x * p.y);
}

bool Line::contains(const AffinePoint& p) const {
  return (Rational(a_) * p.x + Rational(b_) * p.y - Rational(c_)).is_zero();
}

ProjPoint Line::direction() const {
  // Direction vector (b, -a) up to scale.
  return ProjPoint::direction(Rational(b_), Rational(mpz_class(-a_)));
}

std::string Line::str() const {
  std::ostringstream os;
  os << a_.get_str() << "*x + " << b_.get_str() << "*y = " << c_.get_str();
  return os.str();
}

Circle::Circle(const Rational& d, const Rational& e, const Rational& f) : d_(d), e_(e), f_(f) {
  if (radius_squared().sign() <= 0) {
    throw std::invalid_argument("circle with nonpositive squared radius");
  }
}

Rational Circle::radius_squared() const {
  return (d_ * d_ + e_ * e_ - Rational(4) * f_) / Rational(4);
}

Circle Circle::through(const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
  if (collinear(p, q, r)) throw std::invalid_argument("circle through collinear points");
  // Solve the linear system  d x_i + e y_i + f = -(x_i^2 + y_i^2)  by Cramer.
  const Rational lp = p.x * p.x + p.y * p.y;
  const Rational lq = q.x * q.x + q.y * q.y;
  const Rational lr = r.x * r.x + r.y * r.y;
  const Rational det = p.x * (q.y - r.y) - p.y * (q.x - r.x) + (q.x * r.y - q.y * r.x);
  const Rational dd = -(lp * (q.y - r.y) - p.y * (lq - lr) + (lq * r.y - q.y * lr));
  const Rational de = -(p.x * (lq - lr) - lp * (q.x - r.x) + (q.x * lr - lq * r.x));
  const Rational df = -(p.x * (q.y * lr - lq * r.y) - p.y * (q.x * lr - lq * r.x) +
                        lp * (q.x * r.y - q.y * r.x));
  return Circle(dd / det, de / det, df / det);
}

Rational Circle::eval(const AffinePoint& p) const {
  return p.x * p.x + p.y * p.y + d_ * p.x + e_ * p.y + f_;
}

bool Circle::contains(const AffinePoint& p) const { return eval(p).is_zero(); }

std::string Circle::str() const {
  std::ostringstream os;
  os << "x^2 + y^2 + (" << d_.str() << ")*x + (" << e_.str() << ")*y + (" << f_.str() << ") = 0";
  return os.str();
}

const Line& GeneralizedCircle::line() const {
  if (!is_line()) throw std::logic_error("carrier is not a line");
  return *line_;
}

const Circle& GeneralizedCircle::circle() const {
  if (!is_circle()) throw std::logic_error("carrier is not a circle");
  return *circle_;
}

bool GeneralizedCircle::contains(const AffinePoint& p) const {
  return is_line() ? line_->contains(p) : circle_->contains(p);
}

std::string GeneralizedCircle::str() const { return is_line() ? line_->str() : circle_->str(); }

bool operator==(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.kind_ != b.kind_) return false;
  return a.is_line() ? (*a.line_ == *b.line_) : (*a.circle_ == *b.circle_);
}

bool ExtendedLine::contains(const ProjPoint& p) const {
  if (is_at_infinity()) return p.is_infinite();
  if (p.is_infinite()) {
    // Infinite point [dx : dy : 0] lies on a*x + b*y = c iff (dx, dy) is the
    // line's direction, i.e. a*dx + b*dy = 0.
    return (Rational(line_->a()) * p.x() + Rational(line_->b()) * p.y()).is_zero();
  }
  return line_->contains(p.to_affine());
}

ExtendedLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw std::invalid_argument("line through a repeated point");
  if (p.is_infinite() && q.is_infinite()) return ExtendedLine::at_infinity();
  if (!p.is_infinite() && !q.is_infinite()) {
    return ExtendedLine(Line::through(p.to_affine(), q.to_affine()));
  }
  const ProjPoint& dir = p.is_infinite() ? p : q;
  const AffinePoint base = (p.is_infinite() ? q : p).to_affine();
  // Line through base with direction (dx, dy): dy*(x - bx) - dx*(y - by) = 0.
  return ExtendedLine(
      Line(dir.y(), -dir.x(), dir.y() * base.x - dir.x() * base.y));
}

GeneralizedCircle circle_through(const AffinePoint& p, const AffinePoint& q,
                                 const AffinePoint& r) {
  if (p == q || p == r || q == r) throw std::invalid_argument("carrier through repeated points");
  if (collinear(p, q, r)) return GeneralizedCircle(Line::through(p, q));
  return GeneralizedCircle(Circle::through(p, q, r));
}

}  // namespace occ
