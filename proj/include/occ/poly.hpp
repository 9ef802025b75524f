// Sparse bivariate and homogeneous trivariate polynomials over the rationals,
// with the exact-division / gcd / factor-stripping machinery the curve
// operations need.
#pragma once

#include "occ/point.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace occ {

// Polynomial in x, y with rational coefficients.  Terms map (i, j) -> c for
// c * x^i * y^j; zero coefficients are never stored.  The zero polynomial is
// the empty map (degree -1).
class PolyCurve {
 public:
  using Key = std::pair<int, int>;

  PolyCurve() = default;
  static PolyCurve constant(const Rational& c);
  static PolyCurve monomial(int i, int j, const Rational& c);

  const std::map<Key, Rational>& terms() const { return t_; }
  void add_term(int i, int j, const Rational& c);

  bool is_zero() const { return t_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  Rational coeff(int i, int j) const;
  Rational eval(const AffinePoint& p) const;

  PolyCurve dx() const;
  PolyCurve dy() const;

  // Content removed and the leading coefficient (largest (i+j, i, j) in
  // lexicographic order on that triple) made positive; integer coefficients.
  PolyCurve primitive() const;

  std::string str() const;

  friend PolyCurve operator+(const PolyCurve& a, const PolyCurve& b);
  friend PolyCurve operator-(const PolyCurve& a, const PolyCurve& b);
  friend PolyCurve operator*(const PolyCurve& a, const PolyCurve& b);
  friend PolyCurve operator*(const Rational& c, const PolyCurve& a);
  friend bool operator==(const PolyCurve& a, const PolyCurve& b) { return a.t_ == b.t_; }
  friend bool operator!=(const PolyCurve& a, const PolyCurve& b) { return !(a == b); }

 private:
  std::map<Key, Rational> t_;
};

// f(x + dx, y + dy).
PolyCurve shifted(const PolyCurve& f, const Rational& dx, const Rational& dy);

// Exact polynomial division; empty when the divisor does not divide the
// dividend.  The divisor must be nonzero.
std::optional<PolyCurve> try_divide(const PolyCurve& dividend, const PolyCurve& divisor);

// Primitive gcd over Q[x, y] (primitive pseudo-remainder sequence).
PolyCurve poly_gcd(const PolyCurve& a, const PolyCurve& b);

// Product of the distinct irreducible factors, primitive.
PolyCurve squarefree_part(const PolyCurve& f);

// All linear factors over Q split off (with multiplicity); residual has no
// rational linear factor.  residual * prod(linear_factors) = f up to content.
struct LinearSplit {
  std::vector<PolyCurve> linear_factors;
  PolyCurve residual;
};
LinearSplit strip_linear_factors(const PolyCurve& f);

// Rational roots (with multiplicity collapsed to distinct values) of a
// univariate polynomial given by coefficients low-to-high.
std::vector<Rational> univariate_rational_roots(const std::vector<Rational>& coeffs);

// Exact square root of a nonnegative rational, when it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

// Homogeneous polynomial in x, y, z of fixed total degree d; terms map
// (i, j) -> c for c * x^i * y^j * z^(d-i-j).
class HomPolyCurve {
 public:
  using Key = std::pair<int, int>;

  explicit HomPolyCurve(int degree) : d_(degree) {}

  int degree() const { return d_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Key, Rational>& terms() const { return t_; }
  void add_term(int i, int j, const Rational& c);

  Rational coeff(int i, int j) const;
  Rational eval(const ProjPoint& p) const;

  HomPolyCurve dx() const;
  HomPolyCurve dy() const;
  HomPolyCurve dz() const;

  HomPolyCurve scaled(const Rational& c) const;
  HomPolyCurve plus(const HomPolyCurve& o) const;  // degrees must match

  std::string str() const;

  friend bool operator==(const HomPolyCurve& a, const HomPolyCurve& b) {
    return a.d_ == b.d_ && a.t_ == b.t_;
  }
  friend bool operator!=(const HomPolyCurve& a, const HomPolyCurve& b) { return !(a == b); }

 private:
  int d_;
  std::map<Key, Rational> t_;
};

}  // namespace occ
