#include "occ/counting.hpp"

#include "occ/carrier.hpp"
#include "occ/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace occ {

long IncidenceCensus::with_multiplicity(int k) const {
  const auto it = by_multiplicity.find(k);
  return it == by_multiplicity.end() ? 0 : it->second;
}

long IncidenceCensus::total() const {
  long t = 0;
  for (const auto& [mult, count] : by_multiplicity) t += count;
  return t;
}

IncidenceCensus line_census(const PointSet& ps) {
  const std::vector<ProjPoint> pts = ps.projective();
  std::unordered_set<ExtendedLine, ExtendedLineHash> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.insert(line_through(pts[i], pts[j]));
  IncidenceCensus census;
  for (const ExtendedLine& l : lines) {
    int mult = 0;
    for (const ProjPoint& p : pts)
      if (l.contains(p)) ++mult;
    ++census.by_multiplicity[mult];
  }
  return census;
}

long ordinary_lines(const PointSet& ps) { return line_census(ps).with_multiplicity(2); }

long non_q_ordinary_lines(const PointSet& ps, const ProjPoint& q) {
  if (ps.contains(q)) throw std::invalid_argument("reference point must lie outside the set");
  const std::vector<ProjPoint> pts = ps.projective();
  std::unordered_set<ExtendedLine, ExtendedLineHash> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.insert(line_through(pts[i], pts[j]));
  long count = 0;
  for (const ExtendedLine& l : lines) {
    if (l.contains(q)) continue;
    int mult = 0;
    for (const ProjPoint& p : pts)
      if (l.contains(p)) ++mult;
    if (mult == 2) ++count;
  }
  return count;
}

IncidenceCensus circle_census(const PointSet& ps) {
  if (!ps.all_affine()) throw std::invalid_argument("circle census needs an affine point set");
  const std::vector<AffinePoint>& pts = ps.affine;
  std::unordered_set<Circle, CircleHash> circles;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (collinear(pts[i], pts[j], pts[k])) continue;
        circles.insert(Circle::through(pts[i], pts[j], pts[k]));
      }
  IncidenceCensus census;
  for (const Circle& c : circles) {
    int mult = 0;
    for (const AffinePoint& p : pts)
      if (c.contains(p)) ++mult;
    ++census.by_multiplicity[mult];
  }
  return census;
}

void CountReport::validate() const {
  long sum = 0;
  for (long v : per_point) sum += v;
  if (sum != 3 * ordinary)
    throw std::logic_error("ordinary circle triple-count identity failed");
}

CountReport ordinary_circles_brute(const PointSet& ps) {
  if (!ps.all_affine())
    throw std::invalid_argument("ordinary circle counting needs an affine point set");
  const std::vector<AffinePoint>& pts = ps.affine;
  const std::size_t n = pts.size();
  CountReport report;
  report.n = n;
  report.per_point.assign(n, 0);
  report.algorithm = Algorithm::kBrute;

  long events = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const AffinePoint& p = pts[i];
      const AffinePoint& q = pts[j];
      // Circles through p and q have centers mid + t * u on the bisector of
      // pq; a third point r pins down t, so equal t means one circle.
      const Rational ux = p.y - q.y, uy = q.x - p.x;
      const Rational mx = (p.x + q.x) / Rational(2), my = (p.y + q.y) / Rational(2);
      const Rational pl = p.x * p.x + p.y * p.y;
      std::map<Rational, std::pair<long, std::size_t>> groups;  // t -> (count, witness)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const AffinePoint& r = pts[k];
        const Rational dx = r.x - p.x, dy = r.y - p.y;
        const Rational den = (ux * dx + uy * dy) * Rational(2);
        if (den.is_zero()) continue;  // r collinear with p, q
        const Rational num = r.x * r.x + r.y * r.y - pl - (mx * dx + my * dy) * Rational(2);
        auto& slot = groups[num / den];
        ++slot.first;
        slot.second = k;
      }
      for (const auto& [t, slot] : groups) {
        if (slot.first != 1) continue;
        // Exactly three points on this circle; each of them is the witness
        // for exactly one of the three pairs, so per-point tallies land once.
        ++events;
        ++report.per_point[slot.second];
      }
    }
  }
  if (events % 3 != 0) throw std::logic_error("pair scan did not count each circle three times");
  report.ordinary = events / 3;
  report.validate();
  return report;
}

namespace {

constexpr double kEps = 2.220446049250313e-16;  // 2^-52
// Absolute error of a direction component relative to the magnitudes of the
// two products it subtracts.  Each factor carries at most one mpz_get_d
// rounding (<= kEps relative) and each multiply half an ulp, so the true
// relative error stays below 1.1e-15; 2e-15 leaves margin.
constexpr double kDirEps = 2e-15;
constexpr double kTiny = 1e-290;  // absolute floor against subnormal products

// The difference q_k - p written over a single positive denominator,
// (Ax, Ay) / AD, with S = Ax^2 + Ay^2.  Inversion in the unit circle at p
// sends q_k to p + AD * (Ax, Ay) / S, so the segment between the images of
// a and b points along the integer vector
//   S_a * AD_b * (Ax_b, Ay_b) - S_b * AD_a * (Ax_a, Ay_a)
// (scaling the difference by S_a * S_b > 0 preserves orientation).  All
// sign tests run on these integers or on doubles rounded from them.
struct CenterRel {
  mpz_class ax, ay, ad, s;
  double ds;      // rounded S
  double mx, my;  // rounded AD*Ax, AD*Ay
};

void exact_image_dir(const CenterRel& a, const CenterRel& b, mpz_class& vx, mpz_class& vy) {
  const mpz_class f = a.s * b.ad;
  const mpz_class g = b.s * a.ad;
  vx = f * b.ax - g * a.ax;
  vy = f * b.ay - g * a.ay;
}

// Image-segment direction folded into the upper half-plane (positive x-axis
// included), in doubles with certified absolute error bounds.  neg records
// the fold so the exact fallback can reproduce it.
struct FilterDir {
  double x, y;    // approximate folded components
  double ex, ey;  // absolute error bounds
  std::size_t idx;
  int neg;  // +1 if kept, -1 if the exact vector was negated
};

}  // namespace

CountReport ordinary_circles_by_inversion(const PointSet& ps) {
  if (!ps.all_affine())
    throw std::invalid_argument("ordinary circle counting needs an affine point set");
  const std::vector<AffinePoint>& pts = ps.affine;
  const std::size_t n = pts.size();
  CountReport report;
  report.n = n;
  report.per_point.assign(n, 0);
  report.algorithm = Algorithm::kInversion;

  long events3 = 0;
  std::vector<CenterRel> rel;
  mpz_class vxz, vyz, vxz2, vyz2, crossz;
  for (std::size_t c = 0; c < n; ++c) {
    const AffinePoint& center = pts[c];
    rel.clear();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c) continue;
      const Rational dx = pts[k].x - center.x, dy = pts[k].y - center.y;
      CenterRel r;
      r.ax = dx.num() * dy.den();
      r.ay = dy.num() * dx.den();
      r.ad = dx.den() * dy.den();
      r.s = r.ax * r.ax + r.ay * r.ay;
      const double dad = r.ad.get_d();
      r.ds = r.s.get_d();
      r.mx = dad * r.ax.get_d();
      r.my = dad * r.ay.get_d();
      rel.push_back(std::move(r));
    }
    // Circles through the center correspond to lines of the image set that
    // miss the center; such a line with exactly two image points is an
    // ordinary circle through the center.  The direction sort runs on
    // filtered doubles derived from the integer vectors above; any
    // uncertified comparison falls back to exact integers, so the grouping
    // is exact.  The images themselves are never materialized.
    long pair_events = 0;
    std::vector<FilterDir> dirs;
    dirs.reserve(rel.size());
    for (std::size_t a = 0; a < rel.size(); ++a) {
      const CenterRel& ra = rel[a];
      dirs.clear();
      for (std::size_t b = 0; b < rel.size(); ++b) {
        if (b == a) continue;
        const CenterRel& rb = rel[b];
        const double t1x = ra.ds * rb.mx, t2x = rb.ds * ra.mx;
        const double t1y = ra.ds * rb.my, t2y = rb.ds * ra.my;
        FilterDir d{t1x - t2x, t1y - t2y, kDirEps * (std::abs(t1x) + std::abs(t2x)) + kTiny,
                    kDirEps * (std::abs(t1y) + std::abs(t2y)) + kTiny, b, 1};
        if (!std::isfinite(d.x) || !std::isfinite(d.y) || !std::isfinite(d.ex) ||
            !std::isfinite(d.ey)) {
          d.ex = d.ey = std::numeric_limits<double>::infinity();
        }
        bool flip;
        if (std::abs(d.y) > d.ey) {
          flip = d.y < 0;
        } else {
          exact_image_dir(ra, rb, vxz, vyz);
          const int ys = mpz_sgn(vyz.get_mpz_t());
          flip = ys < 0 || (ys == 0 && mpz_sgn(vxz.get_mpz_t()) < 0);
        }
        if (flip) {
          d.x = -d.x;
          d.y = -d.y;
          d.neg = -1;
        }
        dirs.push_back(d);
      }
      const auto certified_cross = [&](const FilterDir& l, const FilterDir& r) -> int {
        const double t1 = l.x * r.y, t2 = l.y * r.x;
        const double cross = t1 - t2;
        const double bound = std::abs(l.x) * r.ey + std::abs(r.y) * l.ex + std::abs(l.y) * r.ex +
                             std::abs(r.x) * l.ey + 2 * (l.ex * r.ey + l.ey * r.ex) +
                             4 * kEps * (std::abs(t1) + std::abs(t2)) + kTiny;
        if (std::isfinite(cross) && std::isfinite(bound) && std::abs(cross) > bound)
          return cross > 0 ? 1 : -1;
        exact_image_dir(ra, rel[l.idx], vxz, vyz);
        exact_image_dir(ra, rel[r.idx], vxz2, vyz2);
        crossz = vxz * vyz2 - vyz * vxz2;
        return l.neg * r.neg * mpz_sgn(crossz.get_mpz_t());
      };
      std::sort(dirs.begin(), dirs.end(),
                [&](const FilterDir& l, const FilterDir& r) { return certified_cross(l, r) > 0; });
      for (std::size_t s = 0; s < dirs.size();) {
        std::size_t e = s + 1;
        while (e < dirs.size() && certified_cross(dirs[s], dirs[e]) == 0) ++e;
        if (e - s == 1) {
          // The image line through a and b passes through the center exactly
          // when the original points a, b are collinear with it.
          const CenterRel& rb = rel[dirs[s].idx];
          crossz = ra.ax * rb.ay - ra.ay * rb.ax;
          if (mpz_sgn(crossz.get_mpz_t()) != 0) ++pair_events;
        }
        s = e;
      }
    }
    if (pair_events % 2 != 0)
      throw std::logic_error("direction scan did not count each image line twice");
    report.per_point[c] = pair_events / 2;
    events3 += pair_events / 2;
  }
  if (events3 % 3 != 0)
    throw std::logic_error("per-point circle counts break the triple-count identity");
  report.ordinary = events3 / 3;
  report.validate();
  return report;
}

SymmetricReport count_symmetric(const SymmetricConfig& c) {
  const IncidenceDecider decide(c);
  const std::vector<SymPos> mem = c.all_members();
  const std::size_t n = mem.size();
  SymmetricReport rep;
  rep.n = n;

  long exactly_one_third = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int thirds = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (decide.collinear(mem[i], mem[j], mem[k])) ++thirds;
      }
      if (thirds == 0) ++rep.ordinary_lines;
      if (thirds == 1) ++exactly_one_third;
    }
  }
  if (exactly_one_third % 3 != 0)
    throw std::logic_error("three-point line pairs did not come in triples");
  rep.three_point_lines = exactly_one_third / 3;

  if (c.all_affine()) {
    CountReport cr;
    cr.n = n;
    cr.per_point.assign(n, 0);
    cr.algorithm = Algorithm::kSymmetric;
    long line_triples = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          bool extended = false;
          for (std::size_t l = 0; l < n && !extended; ++l) {
            if (l == i || l == j || l == k) continue;
            extended = decide.cocircular(mem[i], mem[j], mem[k], mem[l]);
          }
          if (extended) continue;
          if (decide.collinear(mem[i], mem[j], mem[k])) {
            ++line_triples;  // a three-point line, not a circle
            continue;
          }
          ++cr.ordinary;
          ++cr.per_point[i];
          ++cr.per_point[j];
          ++cr.per_point[k];
        }
    if (line_triples != rep.three_point_lines)
      throw std::logic_error("triple scan disagrees with the line census");
    cr.validate();
    rep.circles = cr;
  }
  return rep;
}

long symmetric_ordinary_lines_avoiding(const SymmetricConfig& c, const SymPos& q) {
  if (c.is_member(q)) throw std::invalid_argument("reference position must not be a member");
  const IncidenceDecider decide(c);
  const std::vector<SymPos> mem = c.all_members();
  const std::size_t n = mem.size();
  long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ordinary = true;
      for (std::size_t k = 0; k < n && ordinary; ++k) {
        if (k == i || k == j) continue;
        ordinary = !decide.collinear(mem[i], mem[j], mem[k]);
      }
      if (ordinary && !decide.collinear(mem[i], mem[j], q)) ++count;
    }
  }
  return count;
}

TheoremReport theorem_check_ol(TheoremType type, int m) {
  SymmetricConfig base = make_boroczky(m);
  SymmetricConfig cfg = base;
  SymPos q{1, 1};  // a half-step direction, outside every unmodified orbit
  bool three_quarters = true;
  switch (type) {
    case TheoremType::kA:
      cfg.remove_member(SymPos{0, 0});
      q = SymPos{0, 0};
      three_quarters = false;
      break;
    case TheoremType::kB:
      cfg.remove_member(SymPos{1, 0});
      q = SymPos{1, 1};
      break;
    case TheoremType::kC:
      cfg.add_origin();
      q = SymPos{1, 1};
      break;
    case TheoremType::kD:
      q = SymPos{1, 1};
      three_quarters = false;
      break;
    case TheoremType::kE:
      cfg.remove_member(SymPos{1, 0});
      cfg.remove_member(SymPos{1, 2});
      q = SymPos{1, 2};
      break;
    case TheoremType::kF:
      cfg.add_origin();
      cfg.remove_member(SymPos{0, 0});
      q = SymPos{0, 0};
      break;
  }
  TheoremReport rep;
  rep.type = type;
  rep.m = m;
  rep.n = cfg.size();
  rep.ordinary_avoiding = symmetric_ordinary_lines_avoiding(cfg, q);
  rep.main_term = three_quarters ? Rational(3L * static_cast<long>(rep.n), 4)
                                 : Rational(static_cast<long>(rep.n), 2);
  Rational dev = Rational(rep.ordinary_avoiding) - rep.main_term;
  if (dev.sign() < 0) dev = -dev;
  rep.deviation = dev;
  return rep;
}

}  // namespace occ
