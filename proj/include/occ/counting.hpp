// Census and counting of ordinary lines and circles: an exact brute-force
// counter, an inversion-based counter, and a combinatorial counter for the
// symmetric constructions, cross-validating one another.
#pragma once

#include "occ/configs.hpp"
#include "occ/pointset.hpp"

#include <map>
#include <optional>
#include <vector>

namespace occ {

enum class Algorithm { kBrute, kInversion, kSymmetric };

// How many carriers pass through exactly k members, for each k >= 2.
struct IncidenceCensus {
  std::map<int, long> by_multiplicity;

  long with_multiplicity(int k) const;
  long total() const;
};

// Lines spanned by the set, the line at infinity included when at least two
// directions are present.
IncidenceCensus line_census(const PointSet& ps);
long ordinary_lines(const PointSet& ps);
// Lines through exactly two members avoiding a reference point q outside the
// set.
long non_q_ordinary_lines(const PointSet& ps, const ProjPoint& q);

// Proper circles through at least three members; the set must be affine.
IncidenceCensus circle_census(const PointSet& ps);

struct CountReport {
  std::size_t n = 0;
  long ordinary = 0;
  // Circles through exactly three members, per member (input order); the
  // triple-count identity sum(per_point) == 3 * ordinary is enforced.
  std::vector<long> per_point;
  Algorithm algorithm = Algorithm::kBrute;

  void validate() const;
};

CountReport ordinary_circles_brute(const PointSet& ps);
CountReport ordinary_circles_by_inversion(const PointSet& ps);

struct SymmetricReport {
  std::size_t n = 0;
  long ordinary_lines = 0;
  long three_point_lines = 0;
  std::optional<CountReport> circles;  // affine configurations only
};

// Counts on a symmetric configuration without embedding it, via the integer
// incidence rules (interval-certified where the rules leave the answer open).
SymmetricReport count_symmetric(const SymmetricConfig& c);

// Ordinary lines of the configuration that miss the position q (q must not
// be a member).
long symmetric_ordinary_lines_avoiding(const SymmetricConfig& c, const SymPos& q);

// The six modification patterns of the circle-plus-directions example whose
// ordinary-line counts track n/2 or 3n/4.
enum class TheoremType { kA, kB, kC, kD, kE, kF };

struct TheoremReport {
  TheoremType type;
  int m = 0;
  std::size_t n = 0;        // members of the modified configuration
  long ordinary_avoiding = 0;  // two-point lines missing the reference q
  Rational main_term;       // n/2 or 3n/4 by type
  Rational deviation;       // |ordinary_avoiding - main_term|
};

TheoremReport theorem_check_ol(TheoremType type, int m);

}  // namespace occ
