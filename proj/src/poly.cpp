#include "occ/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace occ {

namespace {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q: dense coefficient vectors, low degree first,
// normalized so the highest entry is nonzero (empty vector = zero).

using UPoly = std::vector<Rational>;

void unormalize(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool uis_zero(const UPoly& p) { return p.empty(); }

UPoly uadd(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  unormalize(r);
  return r;
}

UPoly uneg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

UPoly usub(const UPoly& a, const UPoly& b) { return uadd(a, uneg(b)); }

UPoly umul(const UPoly& a, const UPoly& b) {
  if (uis_zero(a) || uis_zero(b)) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  unormalize(r);
  return r;
}

UPoly uscale(UPoly a, const Rational& c) {
  if (c.is_zero()) return {};
  for (auto& x : a) x *= c;
  return a;
}

// Division with remainder over the field Q; returns quotient, sets rem.
UPoly udivmod(UPoly a, const UPoly& b, UPoly& rem) {
  if (uis_zero(b)) throw std::invalid_argument("univariate division by zero");
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lb = b.back();
  while (!uis_zero(a) && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / lb;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();  // leading term cancelled exactly
    unormalize(a);
  }
  rem = std::move(a);
  unormalize(q);
  return q;
}

bool uexact_div(const UPoly& a, const UPoly& b, UPoly& quot) {
  UPoly rem;
  quot = udivmod(a, b, rem);
  return uis_zero(rem);
}

// Monic gcd over Q.
UPoly ugcd(UPoly a, UPoly b) {
  while (!uis_zero(b)) {
    UPoly rem;
    udivmod(a, b, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (!uis_zero(a)) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Rational ueval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials as polynomials in x with coefficients in Q[y]:
// bx[i] is the Q[y]-coefficient of x^i.  Normalized: back() nonzero.

using BX = std::vector<UPoly>;

void bnormalize(BX& p) {
  while (!p.empty() && uis_zero(p.back())) p.pop_back();
}

int bdeg(const BX& p) { return static_cast<int>(p.size()) - 1; }

BX to_bx(const PolyCurve& f) {
  BX r;
  for (const auto& [key, c] : f.terms()) {
    const auto [i, j] = key;
    if (static_cast<int>(r.size()) <= i) r.resize(i + 1);
    if (static_cast<int>(r[i].size()) <= j) r[i].resize(j + 1, Rational(0));
    r[i][j] = c;
  }
  for (auto& u : r) unormalize(u);
  bnormalize(r);
  return r;
}

PolyCurve from_bx(const BX& p) {
  PolyCurve f;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (!p[i][j].is_zero()) f.add_term(static_cast<int>(i), static_cast<int>(j), p[i][j]);
    }
  }
  return f;
}

// gcd in Q[y] of all x-coefficients.
UPoly bcontent(const BX& p) {
  UPoly g;
  for (const auto& u : p) g = ugcd(g, u);
  return g;
}

BX bprimitive(const BX& p, const UPoly& content) {
  if (p.empty()) return {};
  BX r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (uis_zero(p[i])) continue;
    if (!uexact_div(p[i], content, r[i])) {
      throw std::logic_error("content does not divide coefficient");
    }
  }
  return r;
}

BX bscale(const BX& p, const UPoly& c) {
  BX r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = umul(p[i], c);
  bnormalize(r);
  return r;
}

BX bsub(const BX& a, const BX& b) {
  BX r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    UPoly x = i < a.size() ? a[i] : UPoly{};
    UPoly y = i < b.size() ? b[i] : UPoly{};
    r[i] = usub(x, y);
  }
  bnormalize(r);
  return r;
}

// Pseudo-remainder of a by b in x (coefficients in Q[y]).
BX bprem(BX a, const BX& b) {
  const int db = bdeg(b);
  if (db < 0) throw std::invalid_argument("pseudo-division by zero");
  const UPoly& lb = b.back();
  int steps = bdeg(a) - db + 1;
  while (bdeg(a) >= db && steps > 0) {
    const int shift = bdeg(a) - db;
    const UPoly la = a.back();
    // a <- lb*a - la*x^shift*b, cancelling the leading term.
    BX scaled_b(shift, UPoly{});
    for (const auto& u : b) scaled_b.push_back(umul(u, la));
    a = bsub(bscale(a, lb), scaled_b);
    --steps;
    if (bdeg(a) < db) break;
  }
  // Pad with the unused powers of lb so the result is the true pseudo-remainder.
  for (; steps > 0; --steps) a = bscale(a, lb);
  return a;
}

BX bgcd_primitive(BX a, BX b) {
  if (bdeg(a) < bdeg(b)) std::swap(a, b);
  while (bdeg(b) > 0) {
    BX r = bprem(a, b);
    a = std::move(b);
    if (r.empty()) return bprimitive(a, bcontent(a));
    b = bprimitive(r, bcontent(r));
  }
  if (b.empty()) return bprimitive(a, bcontent(a));
  // b is a nonzero polynomial of x-degree 0; the primitive parts share no
  // x-dependent factor.
  return BX{UPoly{Rational(1)}};
}

PolyCurve top_form(const PolyCurve& f) {
  const int d = f.degree();
  PolyCurve t;
  for (const auto& [key, c] : f.terms()) {
    if (key.first + key.second == d) t.add_term(key.first, key.second, c);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Integer factorization (trial division + Pollard rho), for rational root
// candidate enumeration.

mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xB5297A4Dul);
  while (true) {
    mpz_class x = rng.get_z_range(n - 2) + 2, y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n <= 1) return;
  for (mpz_class p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> divs{1};
  if (n <= 1) return divs;
  std::map<mpz_class, int> f;
  factor_into(n, f);
  for (const auto& [p, e] : f) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyCurve

PolyCurve PolyCurve::constant(const Rational& c) {
  PolyCurve f;
  f.add_term(0, 0, c);
  return f;
}

PolyCurve PolyCurve::monomial(int i, int j, const Rational& c) {
  PolyCurve f;
  f.add_term(i, j, c);
  return f;
}

void PolyCurve::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto it = t_.find({i, j});
  if (it == t_.end()) {
    t_.emplace(Key{i, j}, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

int PolyCurve::degree() const {
  int d = -1;
  for (const auto& [key, c] : t_) d = std::max(d, key.first + key.second);
  return d;
}

Rational PolyCurve::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

Rational PolyCurve::eval(const AffinePoint& p) const {
  // Horner in x per y-power would be faster; plain power accumulation is
  // plenty at the degrees this library handles.
  Rational acc(0);
  for (const auto& [key, c] : t_) {
    Rational term = c;
    for (int k = 0; k < key.first; ++k) term *= p.x;
    for (int k = 0; k < key.second; ++k) term *= p.y;
    acc += term;
  }
  return acc;
}

PolyCurve PolyCurve::dx() const {
  PolyCurve r;
  for (const auto& [key, c] : t_) {
    if (key.first > 0) r.add_term(key.first - 1, key.second, Rational(key.first) * c);
  }
  return r;
}

PolyCurve PolyCurve::dy() const {
  PolyCurve r;
  for (const auto& [key, c] : t_) {
    if (key.second > 0) r.add_term(key.first, key.second - 1, Rational(key.second) * c);
  }
  return r;
}

PolyCurve PolyCurve::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [key, c] : t_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  for (const auto& [key, c] : t_) {
    const mpz_class scaled = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  // Leading term: largest (total degree, i, j).
  Key lead{-1, -1};
  int lead_total = -1;
  for (const auto& [key, c] : t_) {
    const int total = key.first + key.second;
    if (total > lead_total || (total == lead_total && key > lead)) {
      lead = key;
      lead_total = total;
    }
  }
  if ((coeff(lead.first, lead.second) * scale).sign() < 0) scale = -scale;
  PolyCurve r;
  for (const auto& [key, c] : t_) r.add_term(key.first, key.second, c * scale);
  return r;
}

std::string PolyCurve::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads like handwriting.
  std::vector<std::pair<Key, Rational>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  for (const auto& [key, c] : terms) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.sign() < 0 ? -c : c;
    const bool unit = (a == Rational(1)) && (key.first + key.second > 0);
    if (!unit) os << a.str();
    if (key.first > 0) {
      if (!unit) os << "*";
      os << "x";
      if (key.first > 1) os << "^" << key.first;
    }
    if (key.second > 0) {
      if (!unit || key.first > 0) os << "*";
      os << "y";
      if (key.second > 1) os << "^" << key.second;
    }
  }
  return os.str();
}

PolyCurve operator+(const PolyCurve& a, const PolyCurve& b) {
  PolyCurve r = a;
  for (const auto& [key, c] : b.t_) r.add_term(key.first, key.second, c);
  return r;
}

PolyCurve operator-(const PolyCurve& a, const PolyCurve& b) {
  PolyCurve r = a;
  for (const auto& [key, c] : b.t_) r.add_term(key.first, key.second, -c);
  return r;
}

PolyCurve operator*(const PolyCurve& a, const PolyCurve& b) {
  PolyCurve r;
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

PolyCurve operator*(const Rational& c, const PolyCurve& a) {
  PolyCurve r;
  for (const auto& [key, v] : a.t_) r.add_term(key.first, key.second, c * v);
  return r;
}

PolyCurve shifted(const PolyCurve& f, const Rational& dx, const Rational& dy) {
  // Binomial expansion of (x + dx)^i (y + dy)^j, term by term.
  const auto powers = [](const Rational& base, int n) {
    std::vector<Rational> p(n + 1, Rational(1));
    for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * base;
    return p;
  };
  const int d = std::max(f.degree(), 0);
  const auto dxp = powers(dx, d), dyp = powers(dy, d);
  std::vector<std::vector<mpz_class>> choose(d + 1, std::vector<mpz_class>(d + 1, 0));
  for (int n = 0; n <= d; ++n) {
    choose[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : mpz_class(0));
    }
  }
  PolyCurve r;
  for (const auto& [key, c] : f.terms()) {
    const auto [i, j] = key;
    for (int a = 0; a <= i; ++a) {
      for (int b = 0; b <= j; ++b) {
        r.add_term(a, b,
                   c * Rational(mpz_class(choose[i][a] * choose[j][b])) * dxp[i - a] * dyp[j - b]);
      }
    }
  }
  return r;
}

std::optional<PolyCurve> try_divide(const PolyCurve& dividend, const PolyCurve& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (dividend.is_zero()) return PolyCurve{};
  BX a = to_bx(dividend), b = to_bx(divisor);
  if (bdeg(b) == 0) {
    // Divisor is univariate in y: divide every x-coefficient.
    BX q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (uis_zero(a[i])) continue;
      if (!uexact_div(a[i], b[0], q[i])) return std::nullopt;
    }
    return from_bx(q);
  }
  BX q(std::max<std::size_t>(a.size(), b.size()), UPoly{});
  while (bdeg(a) >= bdeg(b)) {
    const int shift = bdeg(a) - bdeg(b);
    UPoly qc;
    if (!uexact_div(a.back(), b.back(), qc)) return std::nullopt;
    q[shift] = uadd(q[shift], qc);
    BX sub(shift, UPoly{});
    for (const auto& u : b) sub.push_back(umul(u, qc));
    a = bsub(a, sub);
    if (a.empty()) break;
  }
  if (!a.empty()) return std::nullopt;
  bnormalize(q);
  return from_bx(q);
}

PolyCurve poly_gcd(const PolyCurve& a, const PolyCurve& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  BX ax = to_bx(a), bx = to_bx(b);
  const UPoly ca = bcontent(ax), cb = bcontent(bx);
  const UPoly cg = ugcd(ca, cb);
  const BX g = bgcd_primitive(bprimitive(ax, ca), bprimitive(bx, cb));
  return from_bx(bscale(g, cg)).primitive();
}

PolyCurve squarefree_part(const PolyCurve& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
  if (f.degree() == 0) return PolyCurve::constant(Rational(1));
  const PolyCurve g = poly_gcd(f, poly_gcd(f.dx(), f.dy()));
  if (g.degree() <= 0) return f.primitive();
  auto q = try_divide(f, g);
  if (!q) throw std::logic_error("gcd does not divide its argument");
  return q->primitive();
}

std::vector<Rational> univariate_rational_roots(const std::vector<Rational>& coeffs) {
  UPoly p = coeffs;
  unormalize(p);
  if (uis_zero(p)) throw std::invalid_argument("root finding on the zero polynomial");
  std::set<Rational> roots;
  std::size_t v = 0;
  while (v < p.size() && p[v].is_zero()) ++v;
  if (v > 0) {
    roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + v);
  }
  if (p.size() <= 1) return {roots.begin(), roots.end()};
  mpz_class den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.size());
  for (const auto& c : p) z.push_back(c.num() * (den_lcm / c.den()));
  for (const mpz_class& num : divisors_of(z.front())) {
    for (const mpz_class& den : divisors_of(z.back())) {
      for (int s : {1, -1}) {
        const Rational cand(s * num, den);
        if (roots.count(cand)) continue;
        if (ueval(p, cand).is_zero()) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (r.is_zero()) return Rational(0);
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
  return Rational(n, d);
}

LinearSplit strip_linear_factors(const PolyCurve& f) {
  if (f.is_zero()) throw std::invalid_argument("factor stripping on zero polynomial");
  LinearSplit out;
  PolyCurve res = f.primitive();
  while (res.degree() >= 1) {
    if (res.degree() == 1) {
      out.linear_factors.push_back(res.primitive());
      res = PolyCurve::constant(Rational(1));
      break;
    }
    const int d = res.degree();
    const PolyCurve top = top_form(res);
    // Candidate factor directions must divide the top form.  For a factor
    // a*x + y + g the direction test is top(1, s) = 0 at s = -a; a factor
    // x + g needs the y^d coefficient of the top form to vanish.
    std::vector<Rational> topline(d + 1, Rational(0));
    for (int j = 0; j <= d; ++j) topline[j] = top.coeff(d - j, j);
    bool found = false;
    for (const Rational& s0 : univariate_rational_roots(topline)) {
      // Lines y = s0*x - g.  Restrict to a sample x = x0 with res(x0, .) != 0;
      // every admissible g shows up as x0*s0 - (root of the restriction).
      for (long probe = 2; !found; ++probe) {
        const Rational x0(probe, 2 * probe - 3);
        UPoly w;  // res(x0, y) as a polynomial in y
        for (const auto& [key, c] : res.terms()) {
          Rational term = c;
          for (int k = 0; k < key.first; ++k) term *= x0;
          if (static_cast<int>(w.size()) <= key.second) w.resize(key.second + 1, Rational(0));
          w[key.second] += term;
        }
        unormalize(w);
        if (uis_zero(w)) continue;  // (x - x0) divides res; resample
        for (const Rational& ystar : univariate_rational_roots(w)) {
          const Rational g = s0 * x0 - ystar;
          PolyCurve ell;
          ell.add_term(1, 0, -s0);
          ell.add_term(0, 1, Rational(1));
          ell.add_term(0, 0, g);
          if (auto q = try_divide(res, ell)) {
            out.linear_factors.push_back(ell.primitive());
            res = std::move(*q);
            found = true;
            break;
          }
        }
        break;  // sample was usable; candidates exhausted for this direction
      }
      if (found) break;
    }
    if (!found && top.coeff(0, d).is_zero()) {
      // Vertical factors x + g: restrict to a sample y = y0.
      for (long probe = 2; !found; ++probe) {
        const Rational y0(probe, 2 * probe - 3);
        UPoly w;  // res(x, y0) as a polynomial in x
        for (const auto& [key, c] : res.terms()) {
          Rational term = c;
          for (int k = 0; k < key.second; ++k) term *= y0;
          if (static_cast<int>(w.size()) <= key.first) w.resize(key.first + 1, Rational(0));
          w[key.first] += term;
        }
        unormalize(w);
        if (uis_zero(w)) continue;
        for (const Rational& xstar : univariate_rational_roots(w)) {
          PolyCurve ell;
          ell.add_term(1, 0, Rational(1));
          ell.add_term(0, 0, -xstar);
          if (auto q = try_divide(res, ell)) {
            out.linear_factors.push_back(ell.primitive());
            res = std::move(*q);
            found = true;
            break;
          }
        }
        break;
      }
    }
    if (!found) break;
  }
  out.residual = res.primitive();
  return out;
}

// ---------------------------------------------------------------------------
// HomPolyCurve

void HomPolyCurve::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0 || i + j > d_) throw std::invalid_argument("exponents exceed degree");
  if (c.is_zero()) return;
  auto it = t_.find({i, j});
  if (it == t_.end()) {
    t_.emplace(Key{i, j}, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Rational HomPolyCurve::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

Rational HomPolyCurve::eval(const ProjPoint& p) const {
  Rational acc(0);
  for (const auto& [key, c] : t_) {
    Rational term = c;
    for (int k = 0; k < key.first; ++k) term *= p.x();
    for (int k = 0; k < key.second; ++k) term *= p.y();
    for (int k = 0; k < d_ - key.first - key.second; ++k) term *= p.z();
    acc += term;
  }
  return acc;
}

HomPolyCurve HomPolyCurve::dx() const {
  HomPolyCurve r(d_ - 1);
  for (const auto& [key, c] : t_) {
    if (key.first > 0) r.add_term(key.first - 1, key.second, Rational(key.first) * c);
  }
  return r;
}

HomPolyCurve HomPolyCurve::dy() const {
  HomPolyCurve r(d_ - 1);
  for (const auto& [key, c] : t_) {
    if (key.second > 0) r.add_term(key.first, key.second - 1, Rational(key.second) * c);
  }
  return r;
}

HomPolyCurve HomPolyCurve::dz() const {
  HomPolyCurve r(d_ - 1);
  for (const auto& [key, c] : t_) {
    const int k = d_ - key.first - key.second;
    if (k > 0) r.add_term(key.first, key.second, Rational(k) * c);
  }
  return r;
}

HomPolyCurve HomPolyCurve::scaled(const Rational& c) const {
  HomPolyCurve r(d_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : t_) r.add_term(key.first, key.second, c * v);
  return r;
}

HomPolyCurve HomPolyCurve::plus(const HomPolyCurve& o) const {
  if (d_ != o.d_) throw std::invalid_argument("degree mismatch in homogeneous sum");
  HomPolyCurve r = *this;
  for (const auto& [key, v] : o.t_) r.add_term(key.first, key.second, v);
  return r;
}

std::string HomPolyCurve::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  std::vector<std::pair<Key, Rational>> terms(t_.begin(), t_.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [key, c] : terms) {
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.sign() < 0 ? -c : c;
    const int zk = d_ - key.first - key.second;
    const bool unit = (a == Rational(1)) && (key.first + key.second + zk > 0);
    if (!unit) os << a.str();
    bool need_star = !unit;
    const auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var("x", key.first);
    var("y", key.second);
    var("z", zk);
  }
  return os.str();
}

}  // namespace occ
