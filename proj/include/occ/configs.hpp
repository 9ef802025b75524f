// Generators for the symmetric constructions (aligned concentric polygons,
// circle-plus-infinity examples and their modifications), with integer
// incidence rules and interval-certified embeddings.
#pragma once

#include "occ/interval.hpp"
#include "occ/pointset.hpp"

#include <optional>
#include <vector>

namespace occ {

enum class OrbitKind { kCircle, kInfinity };

struct Orbit {
  OrbitKind kind;
  Rational radius;  // circle orbits only; positive, pairwise distinct
};

// A rotational position: orbit index plus an angle index counted in HALF
// steps (doubled, modulo 2m), so that midpoints between members are
// addressable.  Real members sit at even doubled indices; orbit -1 with
// doubled 0 is the common center.
//
// Circle orbit, doubled t: the point radius * (cos(t*pi/m), sin(t*pi/m)).
// Infinity orbit, doubled u: the direction angle u*pi/(2m) + pi/2, i.e. the
// projective point [-sin(u*pi/(2m)) : cos(u*pi/(2m)) : 0].
struct SymPos {
  int orbit = 0;
  int doubled = 0;

  static SymPos origin() { return SymPos{-1, 0}; }
  bool is_origin() const { return orbit < 0; }

  friend bool operator==(const SymPos& a, const SymPos& b) {
    return a.orbit == b.orbit && (a.orbit < 0 || a.doubled == b.doubled);
  }
  friend bool operator!=(const SymPos& a, const SymPos& b) { return !(a == b); }
  friend bool operator<(const SymPos& a, const SymPos& b) {
    if (a.orbit != b.orbit) return a.orbit < b.orbit;
    return a.orbit >= 0 && a.doubled < b.doubled;
  }
};

class SymmetricConfig {
 public:
  SymmetricConfig(int m, std::vector<Orbit> orbits);

  int m() const { return m_; }
  const std::vector<Orbit>& orbits() const { return orbits_; }
  const std::vector<SymPos>& members() const { return members_; }
  bool has_origin() const { return has_origin_; }
  const std::vector<SymPos>& deletions() const { return deletions_; }

  // All present members, the origin included when present.
  std::vector<SymPos> all_members() const;
  bool is_member(const SymPos& p) const;
  bool all_affine() const;  // no infinity-orbit members present
  std::size_t size() const { return members_.size() + (has_origin_ ? 1 : 0); }

  void add_member(const SymPos& p);     // duplicate-add error
  void remove_member(const SymPos& p);  // missing-remove error; recorded
  void add_origin();

 private:
  int m_;
  std::vector<Orbit> orbits_;
  std::vector<SymPos> members_;
  std::vector<SymPos> deletions_;
  bool has_origin_ = false;
};

// ---------------------------------------------------------------------------
// Generators

SymmetricConfig make_even_construction(int n, const Rational& radius_ratio);
// The even construction on n + 1 points with one member removed.
SymmetricConfig make_odd_construction(int n, const Rational& radius_ratio, const SymPos& removed);
// m points of a unit circle plus m directions at infinity.
SymmetricConfig make_boroczky(int m);

struct ConfigOp {
  enum class Kind { kRemove, kAddOrigin, kAddPoint };
  Kind kind;
  SymPos target{};  // for kRemove / kAddPoint
};
SymmetricConfig modify_config(const SymmetricConfig& c, const std::vector<ConfigOp>& ops);

// ---------------------------------------------------------------------------
// Symmetry-forced incidence rules (positions need not be present members)

enum class Incidence { kFalse, kTrue, kRadiusDependent };

Incidence sym_collinear(const SymmetricConfig& c, const SymPos& a, const SymPos& b,
                        const SymPos& d);
// Circle-orbit positions only; lying on a common circle or line.
bool sym_cocircular(const SymmetricConfig& c, const SymPos& a, const SymPos& b, const SymPos& d,
                    const SymPos& e);
// Present members s of the other circle orbit equidistant from two same-orbit
// positions: 2s = j + k (mod 2m) in doubled indices.
std::vector<SymPos> equidistant_points(const SymmetricConfig& c, const SymPos& j,
                                       const SymPos& k);

// ---------------------------------------------------------------------------
// Embeddings

struct EmbeddedMember {
  SymPos pos;
  IntervalPoint pt;
};

struct EmbeddedConfig {
  SymmetricConfig source;
  mpfr_prec_t precision;
  // Affine members; with a finitizing transform, every member lands here.
  std::vector<EmbeddedMember> points;
  // Set for inverted (line-plus-circle) instances.
  std::optional<EmbeddedMember> inversion_center;
  // Infinity members as unit-scale direction vectors (no transform given).
  std::vector<EmbeddedMember> directions;
};

// Interval coordinates for the affine members (circle orbits and origin).
EmbeddedConfig embed(const SymmetricConfig& c, mpfr_prec_t precision);
// Also embeds infinity members, mapped to the affine chart by the transform.
EmbeddedConfig embed(const SymmetricConfig& c, mpfr_prec_t precision, const ProjTransform& t);

// Interval coordinates of a single position (affine orbits / origin only).
IntervalPoint embed_position(const SymmetricConfig& c, const SymPos& p, mpfr_prec_t precision);

// Exact rational coordinates exist when every present member sits at an
// angle whose sine and cosine (or tangent, for directions) are rational —
// the quarter-turn grid for circle points, the eighth-turn grid for
// directions.
bool has_exact_embedding(const SymmetricConfig& c);
PointSet exact_embedding(const SymmetricConfig& c);

// Inverts the configuration at a half-step circle point (a circle point
// strictly between two adjacent members); the images lie on one line and one
// circle.
EmbeddedConfig make_linecircle_construction(int n, const Rational& radius_ratio,
                                            int inversion_center_index);

// ---------------------------------------------------------------------------
// Certified decisions: integer rule when symmetry forces the answer,
// interval sign with 64 -> 256 -> 1024 bit escalation otherwise.  An
// undecided sign at the top precision raises an error naming the tuple.

class IncidenceDecider {
 public:
  explicit IncidenceDecider(const SymmetricConfig& c) : c_(c) {}

  bool collinear(const SymPos& a, const SymPos& b, const SymPos& d) const;
  bool cocircular(const SymPos& a, const SymPos& b, const SymPos& d, const SymPos& e) const;

 private:
  const SymmetricConfig& c_;
};

}  // namespace occ
