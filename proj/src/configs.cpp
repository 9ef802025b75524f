#include "occ/configs.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace occ {

namespace {

int posmod(long v, long md) {
  long r = v % md;
  return static_cast<int>(r < 0 ? r + md : r);
}

enum class PosKind { kOrigin, kCircle, kInfinity };

struct Resolved {
  PosKind kind;
  int orbit;  // circle orbits only
  int t;      // doubled index, reduced mod 2m
};

Resolved resolve(const SymmetricConfig& c, const SymPos& p) {
  if (p.is_origin()) return Resolved{PosKind::kOrigin, -1, 0};
  if (p.orbit < 0 || p.orbit >= static_cast<int>(c.orbits().size()))
    throw std::invalid_argument("position references an unknown orbit");
  const int t = posmod(p.doubled, 2L * c.m());
  if (c.orbits()[p.orbit].kind == OrbitKind::kInfinity) return Resolved{PosKind::kInfinity, -1, t};
  return Resolved{PosKind::kCircle, p.orbit, t};
}

bool same_position(const Resolved& a, const Resolved& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == PosKind::kOrigin) return true;
  return a.t == b.t && (a.kind == PosKind::kInfinity || a.orbit == b.orbit);
}

std::string pos_str(const SymPos& p) {
  if (p.is_origin()) return "origin";
  return "(orbit " + std::to_string(p.orbit) + ", half-index " + std::to_string(p.doubled) + ")";
}

// Directions are identified modulo a half turn: t*pi/m steps for chords and
// rays, u*pi/(2m) steps for members at infinity.
bool aligned(int t1, int t2, int m) { return (t1 - t2) % m == 0; }

}  // namespace

SymmetricConfig::SymmetricConfig(int m, std::vector<Orbit> orbits)
    : m_(m), orbits_(std::move(orbits)) {
  if (m_ < 1) throw std::invalid_argument("rotation order must be positive");
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (orbits_[i].kind != OrbitKind::kCircle) continue;
    if (orbits_[i].radius.sign() <= 0)
      throw std::invalid_argument("circle orbit radius must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (orbits_[j].kind == OrbitKind::kCircle && orbits_[j].radius == orbits_[i].radius)
        throw std::invalid_argument("circle orbit radii must be distinct");
  }
}

std::vector<SymPos> SymmetricConfig::all_members() const {
  std::vector<SymPos> out = members_;
  if (has_origin_) out.push_back(SymPos::origin());
  return out;
}

bool SymmetricConfig::is_member(const SymPos& p) const {
  if (p.is_origin()) return has_origin_;
  const int t = posmod(p.doubled, 2L * m_);
  for (const SymPos& q : members_)
    if (q.orbit == p.orbit && q.doubled == t) return true;
  return false;
}

bool SymmetricConfig::all_affine() const {
  for (const SymPos& p : members_)
    if (orbits_[p.orbit].kind == OrbitKind::kInfinity) return false;
  return true;
}

void SymmetricConfig::add_member(const SymPos& p) {
  if (p.is_origin()) {
    add_origin();
    return;
  }
  resolve(*this, p);  // validates the orbit id
  SymPos q{p.orbit, posmod(p.doubled, 2L * m_)};
  if (is_member(q)) throw std::invalid_argument("duplicate addition of member " + pos_str(q));
  members_.push_back(q);
}

void SymmetricConfig::remove_member(const SymPos& p) {
  if (p.is_origin()) {
    if (!has_origin_) throw std::invalid_argument("removal of absent origin");
    has_origin_ = false;
    deletions_.push_back(SymPos::origin());
    return;
  }
  const int t = posmod(p.doubled, 2L * m_);
  for (auto it = members_.begin(); it != members_.end(); ++it) {
    if (it->orbit == p.orbit && it->doubled == t) {
      members_.erase(it);
      deletions_.push_back(SymPos{p.orbit, t});
      return;
    }
  }
  throw std::invalid_argument("removal of absent member " + pos_str(p));
}

void SymmetricConfig::add_origin() {
  if (has_origin_) throw std::invalid_argument("duplicate addition of the origin");
  has_origin_ = true;
}

SymmetricConfig make_even_construction(int n, const Rational& radius_ratio) {
  if (n < 6 || n % 2 != 0) throw std::invalid_argument("even construction needs even n >= 6");
  if (radius_ratio.sign() <= 0 || radius_ratio == Rational(1))
    throw std::invalid_argument("degenerate radius ratio");
  const int m = n / 2;
  SymmetricConfig c(m, {Orbit{OrbitKind::kCircle, Rational(1)},
                        Orbit{OrbitKind::kCircle, radius_ratio}});
  for (int orbit = 0; orbit < 2; ++orbit)
    for (int j = 0; j < m; ++j) c.add_member(SymPos{orbit, 2 * j});
  return c;
}

SymmetricConfig make_odd_construction(int n, const Rational& radius_ratio,
                                      const SymPos& removed) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("odd construction needs odd n >= 5");
  SymmetricConfig c = make_even_construction(n + 1, radius_ratio);
  c.remove_member(removed);
  return c;
}

SymmetricConfig make_boroczky(int m) {
  if (m < 3) throw std::invalid_argument("circle-plus-directions construction needs m >= 3");
  SymmetricConfig c(m, {Orbit{OrbitKind::kCircle, Rational(1)}, Orbit{OrbitKind::kInfinity, Rational(0)}});
  for (int orbit = 0; orbit < 2; ++orbit)
    for (int j = 0; j < m; ++j) c.add_member(SymPos{orbit, 2 * j});
  return c;
}

SymmetricConfig modify_config(const SymmetricConfig& c, const std::vector<ConfigOp>& ops) {
  SymmetricConfig out = c;
  for (const ConfigOp& op : ops) {
    switch (op.kind) {
      case ConfigOp::Kind::kRemove:
        out.remove_member(op.target);
        break;
      case ConfigOp::Kind::kAddOrigin:
        out.add_origin();
        break;
      case ConfigOp::Kind::kAddPoint:
        if (op.target.is_origin()) {
          out.add_origin();
          break;
        }
        if (posmod(op.target.doubled, 2) == 0)
          throw std::invalid_argument(
              "extra points are restricted to the origin and half-step positions");
        out.add_member(op.target);
        break;
    }
  }
  return out;
}

Incidence sym_collinear(const SymmetricConfig& c, const SymPos& a, const SymPos& b,
                        const SymPos& d) {
  const Resolved r[3] = {resolve(c, a), resolve(c, b), resolve(c, d)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (same_position(r[i], r[j]))
        throw std::invalid_argument("collinearity requires distinct positions");

  const int m = c.m();
  const int m2 = 2 * m;
  std::vector<Resolved> infs, circles;
  bool origin = false;
  for (const Resolved& p : r) {
    if (p.kind == PosKind::kInfinity)
      infs.push_back(p);
    else if (p.kind == PosKind::kCircle)
      circles.push_back(p);
    else
      origin = true;
  }

  if (infs.size() == 3) return Incidence::kTrue;  // the line at infinity
  if (infs.size() == 2) return Incidence::kFalse;

  if (infs.size() == 1) {
    const int u = infs[0].t;
    if (origin) {
      // Ray through the origin and a circle point has slope angle t*pi/m;
      // the direction u*pi/(2m) + pi/2 matches when 2t = u + m (mod 2m).
      return posmod(2L * circles[0].t - u - m, m2) == 0 ? Incidence::kTrue : Incidence::kFalse;
    }
    const Resolved& p = circles[0];
    const Resolved& q = circles[1];
    if (p.orbit == q.orbit) {
      // Chord direction is the half-sum angle plus a quarter turn.
      return posmod(p.t + q.t - u, m2) == 0 ? Incidence::kTrue : Incidence::kFalse;
    }
    if (aligned(p.t, q.t, m)) {
      // Cross-orbit pair on a common diameter.
      return posmod(2L * p.t - u - m, m2) == 0 ? Incidence::kTrue : Incidence::kFalse;
    }
    return Incidence::kRadiusDependent;
  }

  if (origin) {
    // The origin sees two circle points; collinear exactly on a common
    // diameter, whatever the radii.
    return aligned(circles[0].t, circles[1].t, m) ? Incidence::kTrue : Incidence::kFalse;
  }

  // Three circle points.
  const Resolved& p = circles[0];
  const Resolved& q = circles[1];
  const Resolved& s = circles[2];
  if (p.orbit == q.orbit && q.orbit == s.orbit) return Incidence::kFalse;

  if (p.orbit != q.orbit && q.orbit != s.orbit && p.orbit != s.orbit) {
    const bool a12 = aligned(p.t, q.t, m);
    const bool a13 = aligned(p.t, s.t, m);
    const bool a23 = aligned(q.t, s.t, m);
    if (a12 && a13 && a23) return Incidence::kTrue;
    if (a12 || a13 || a23) return Incidence::kFalse;
    return Incidence::kRadiusDependent;
  }

  // Exactly one same-orbit pair.
  const Resolved* pair[2];
  const Resolved* other;
  if (p.orbit == q.orbit) {
    pair[0] = &p, pair[1] = &q, other = &s;
  } else if (p.orbit == s.orbit) {
    pair[0] = &p, pair[1] = &s, other = &q;
  } else {
    pair[0] = &q, pair[1] = &s, other = &p;
  }
  if (aligned(pair[0]->t, pair[1]->t, m)) {
    // Antipodal pair: the chord is a diameter.
    return aligned(other->t, pair[0]->t, m) ? Incidence::kTrue : Incidence::kFalse;
  }
  return Incidence::kRadiusDependent;
}

bool sym_cocircular(const SymmetricConfig& c, const SymPos& a, const SymPos& b, const SymPos& d,
                    const SymPos& e) {
  const Resolved r[4] = {resolve(c, a), resolve(c, b), resolve(c, d), resolve(c, e)};
  for (const Resolved& p : r)
    if (p.kind != PosKind::kCircle)
      throw std::invalid_argument("cocircularity rule covers circle-orbit positions only");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (same_position(r[i], r[j]))
        throw std::invalid_argument("cocircularity requires distinct positions");

  std::vector<int> orbits;
  for (const Resolved& p : r)
    if (std::find(orbits.begin(), orbits.end(), p.orbit) == orbits.end())
      orbits.push_back(p.orbit);

  if (orbits.size() == 1) return true;  // the orbit circle itself
  if (orbits.size() > 2)
    throw std::invalid_argument("cocircularity rule needs at most two circle orbits");

  int count_first = 0;
  for (const Resolved& p : r)
    if (p.orbit == orbits[0]) ++count_first;
  if (count_first != 2) return false;  // 3 + 1 split: concentric circles meet nowhere

  // 2 + 2: a common circle needs its center on both chord axes, which meet
  // only at the common center unless the axes coincide.
  long first_sum = 0, second_sum = 0;
  for (const Resolved& p : r)
    (p.orbit == orbits[0] ? first_sum : second_sum) += p.t;
  return posmod(first_sum - second_sum, 2L * c.m()) == 0;
}

std::vector<SymPos> equidistant_points(const SymmetricConfig& c, const SymPos& j,
                                       const SymPos& k) {
  const Resolved rj = resolve(c, j), rk = resolve(c, k);
  if (rj.kind != PosKind::kCircle || rk.kind != PosKind::kCircle || rj.orbit != rk.orbit)
    throw std::invalid_argument("equidistant query needs two positions of one circle orbit");
  if (same_position(rj, rk)) throw std::invalid_argument("equidistant query needs distinct positions");
  std::vector<SymPos> out;
  for (const SymPos& s : c.members()) {
    if (s.orbit == rj.orbit || c.orbits()[s.orbit].kind != OrbitKind::kCircle) continue;
    // On the perpendicular bisector axis of the chord: 2s = j + k (mod 2m).
    if (posmod(2L * s.doubled - rj.t - rk.t, 2L * c.m()) == 0) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings

IntervalPoint embed_position(const SymmetricConfig& c, const SymPos& p, mpfr_prec_t precision) {
  const Resolved r = resolve(c, p);
  if (r.kind == PosKind::kInfinity)
    throw std::invalid_argument("direction " + pos_str(p) + " has no affine embedding");
  if (r.kind == PosKind::kOrigin)
    return IntervalPoint{Interval::from_rational(Rational(0), precision),
                         Interval::from_rational(Rational(0), precision)};
  const Rational& radius = c.orbits()[r.orbit].radius;
  const Rational angle(r.t, c.m());  // of pi
  return IntervalPoint{Interval::cos_pi_times(angle, precision).scaled(radius),
                       Interval::sin_pi_times(angle, precision).scaled(radius)};
}

namespace {

// Direction of an infinity position: angle u*pi/(2m) + pi/2.
IntervalPoint direction_box(const SymmetricConfig& c, int u, mpfr_prec_t precision) {
  const Rational angle(u, 2L * c.m());  // of pi
  return IntervalPoint{-Interval::sin_pi_times(angle, precision),
                       Interval::cos_pi_times(angle, precision)};
}

IntervalPoint apply_transform_box(const ProjTransform& t, const Interval& hx, const Interval& hy,
                                  const Interval& hz) {
  Interval img[3];
  for (int row = 0; row < 3; ++row)
    img[row] = hx.scaled(t.at(row, 0)) + hy.scaled(t.at(row, 1)) + hz.scaled(t.at(row, 2));
  if (img[2].sign() == 0)
    throw std::domain_error("transform does not certifiably finitize the point");
  return IntervalPoint{img[0] / img[2], img[1] / img[2]};
}

}  // namespace

EmbeddedConfig embed(const SymmetricConfig& c, mpfr_prec_t precision) {
  EmbeddedConfig out{c, precision, {}, std::nullopt};
  for (const SymPos& p : c.members()) {
    if (c.orbits()[p.orbit].kind == OrbitKind::kInfinity) {
      out.directions.push_back(EmbeddedMember{p, direction_box(c, resolve(c, p).t, precision)});
      continue;
    }
    out.points.push_back(EmbeddedMember{p, embed_position(c, p, precision)});
  }
  if (c.has_origin())
    out.points.push_back(EmbeddedMember{SymPos::origin(), embed_position(c, SymPos::origin(), precision)});
  return out;
}

EmbeddedConfig embed(const SymmetricConfig& c, mpfr_prec_t precision, const ProjTransform& t) {
  EmbeddedConfig out{c, precision, {}, std::nullopt};
  const Interval one = Interval::from_rational(Rational(1), precision);
  const Interval zero = Interval::from_rational(Rational(0), precision);
  for (const SymPos& p : c.all_members()) {
    if (!p.is_origin() && c.orbits()[p.orbit].kind == OrbitKind::kInfinity) {
      const IntervalPoint d = direction_box(c, resolve(c, p).t, precision);
      out.points.push_back(EmbeddedMember{p, apply_transform_box(t, d.x, d.y, zero)});
    } else {
      const IntervalPoint a = embed_position(c, p, precision);
      out.points.push_back(EmbeddedMember{p, apply_transform_box(t, a.x, a.y, one)});
    }
  }
  return out;
}

bool has_exact_embedding(const SymmetricConfig& c) {
  for (const SymPos& p : c.members()) {
    const Resolved r = resolve(c, p);
    if (r.kind == PosKind::kCircle && (2L * r.t) % c.m() != 0) return false;
    // Directions tolerate the eighth-turn grid (rational tangent).
    if (r.kind == PosKind::kInfinity && (2L * r.t) % c.m() != 0) return false;
  }
  return true;
}

PointSet exact_embedding(const SymmetricConfig& c) {
  if (!has_exact_embedding(c))
    throw std::invalid_argument("configuration has no exact rational embedding");
  static const int kQuarter[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};   // cos, sin
  static const int kEighth[8][2] = {{0, 1},  {-1, 1}, {-1, 0}, {-1, -1},  // -sin, cos
                                    {0, -1}, {1, -1}, {1, 0},  {1, 1}};
  PointSet out;
  for (const SymPos& p : c.members()) {
    const Resolved r = resolve(c, p);
    if (r.kind == PosKind::kCircle) {
      const int q = static_cast<int>((2L * r.t / c.m()) % 4);
      const Rational& radius = c.orbits()[r.orbit].radius;
      out.affine.push_back(AffinePoint{radius * Rational(kQuarter[q][0]),
                                       radius * Rational(kQuarter[q][1])});
    } else {
      const int e = static_cast<int>((2L * r.t / c.m()) % 8);
      out.infinity.push_back(ProjPoint::direction(Rational(kEighth[e][0]), Rational(kEighth[e][1])));
    }
  }
  if (c.has_origin()) out.affine.push_back(AffinePoint{Rational(0), Rational(0)});
  out.validate();
  return out;
}

EmbeddedConfig make_linecircle_construction(int n, const Rational& radius_ratio,
                                            int inversion_center_index) {
  SymmetricConfig base = (n % 2 == 0) ? make_even_construction(n, radius_ratio)
                                      : make_odd_construction(n, radius_ratio, SymPos{1, 0});
  const int m = base.m();
  if (inversion_center_index < 0 || inversion_center_index >= m)
    throw std::invalid_argument("inversion center index out of range");
  const SymPos center_pos{0, posmod(2L * inversion_center_index + 1, 2L * m)};
  if (base.is_member(center_pos))
    throw std::invalid_argument("inversion center coincides with a member");

  const mpfr_prec_t precision = 256;
  const IntervalPoint center = embed_position(base, center_pos, precision);
  EmbeddedConfig out{base, precision, {}, EmbeddedMember{center_pos, center}};
  for (const SymPos& p : base.members()) {
    const IntervalPoint q = embed_position(base, p, precision);
    const Interval dx = q.x - center.x, dy = q.y - center.y;
    const Interval rho = dx * dx + dy * dy;
    // Unit-radius inversion about the half-step point.
    out.points.push_back(
        EmbeddedMember{p, IntervalPoint{center.x + dx / rho, center.y + dy / rho}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certified decisions

namespace {

std::string undecided_msg(const char* what, std::initializer_list<SymPos> ps) {
  std::string msg = std::string(what) + " undecided at 1024 bits for";
  for (const SymPos& p : ps) msg += " " + pos_str(p);
  return msg;
}

}  // namespace

bool IncidenceDecider::collinear(const SymPos& a, const SymPos& b, const SymPos& d) const {
  const Incidence rule = sym_collinear(c_, a, b, d);
  if (rule != Incidence::kRadiusDependent) return rule == Incidence::kTrue;

  // Radius-dependent tuples have at most one direction; a certified nonzero
  // settles them (a symmetry-forced zero would have been caught above).
  const SymPos* ps[3] = {&a, &b, &d};
  const SymPos* inf = nullptr;
  std::vector<const SymPos*> affine;
  for (const SymPos* p : ps) {
    if (!p->is_origin() && c_.orbits()[p->orbit].kind == OrbitKind::kInfinity)
      inf = p;
    else
      affine.push_back(p);
  }
  for (mpfr_prec_t prec : {mpfr_prec_t(64), mpfr_prec_t(256), mpfr_prec_t(1024)}) {
    Interval det(prec);
    if (inf == nullptr) {
      det = orient_box(embed_position(c_, a, prec), embed_position(c_, b, prec),
                       embed_position(c_, d, prec));
    } else {
      const IntervalPoint p = embed_position(c_, *affine[0], prec);
      const IntervalPoint q = embed_position(c_, *affine[1], prec);
      const IntervalPoint dir = direction_box(c_, resolve(c_, *inf).t, prec);
      det = (q.x - p.x) * dir.y - (q.y - p.y) * dir.x;
    }
    if (det.sign() != 0) return false;
  }
  throw std::runtime_error(undecided_msg("collinearity", {a, b, d}));
}

bool IncidenceDecider::cocircular(const SymPos& a, const SymPos& b, const SymPos& d,
                                  const SymPos& e) const {
  const SymPos* ps[4] = {&a, &b, &d, &e};
  std::vector<const SymPos*> circles;
  bool origin = false;
  for (const SymPos* p : ps) {
    switch (resolve(c_, *p).kind) {
      case PosKind::kOrigin:
        origin = true;
        break;
      case PosKind::kInfinity:
        throw std::logic_error("cocircularity query on a direction");
      case PosKind::kCircle:
        circles.push_back(p);
        break;
    }
  }
  if (!origin) return sym_cocircular(c_, a, b, d, e);

  // Origin plus three circle points.
  const Resolved r0 = resolve(c_, *circles[0]);
  const Resolved r1 = resolve(c_, *circles[1]);
  const Resolved r2 = resolve(c_, *circles[2]);
  const int m = c_.m();
  if (r0.orbit == r1.orbit && r1.orbit == r2.orbit) return false;  // center off its own circle
  const bool a01 = aligned(r0.t, r1.t, m);
  const bool a02 = aligned(r0.t, r2.t, m);
  const bool a12 = aligned(r1.t, r2.t, m);
  if (a01 && a02 && a12) return true;  // four points of one diameter line
  if (a01 || a02 || a12) return false;  // three of the four collinear, one off the line

  for (mpfr_prec_t prec : {mpfr_prec_t(64), mpfr_prec_t(256), mpfr_prec_t(1024)}) {
    const IntervalPoint o{Interval::from_rational(Rational(0), prec),
                          Interval::from_rational(Rational(0), prec)};
    const Interval det =
        cocircular_box(o, embed_position(c_, *circles[0], prec),
                       embed_position(c_, *circles[1], prec), embed_position(c_, *circles[2], prec));
    if (det.sign() != 0) return false;
  }
  throw std::runtime_error(undecided_msg("cocircularity", {a, b, d, e}));
}

}  // namespace occ
