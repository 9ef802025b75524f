// File formats: exact rational point sets (JSON/CSV), render-only SVG,
// interval coordinate files for embedded configurations, configuration
// descriptors, and homogeneous curve files.
#pragma once

#include "occ/configs.hpp"
#include "occ/poly.hpp"
#include "occ/pointset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace occ {

// {"points":[{"x":"num/den","y":"num/den"}], "infinity":[{"x":..,"y":..,"z":"0"}]}
std::string point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const std::string& text);

// Header x,y with rational strings; affine sets only.
std::string point_set_to_csv(const PointSet& ps);
PointSet point_set_from_csv(const std::string& text);

// Render-only; never re-ingested.
std::string point_set_to_svg(const PointSet& ps);

// Interval coordinates with exact dyadic endpoints and precision metadata.
std::string embedded_to_json(const EmbeddedConfig& ec);

// {"degree": d, "terms": [{"x": i, "y": j, "c": "num/den"}]}; the z exponent
// is implicit (d - i - j).
std::string curve_to_json(const HomPolyCurve& h);
HomPolyCurve curve_from_json(const std::string& text);

// The canonical reproducibility record for generated configurations.
struct Descriptor {
  std::string family;  // even | odd | boroczky | linecircle | modified
  int n = 0;           // even / odd / linecircle
  int m = 0;           // boroczky / modified
  Rational radius_ratio{5, 7};
  std::vector<SymPos> deletions;
  std::vector<SymPos> additions;  // the origin, or half-step positions
  std::optional<int> inversion_center_index;
};

std::string descriptor_to_json(const Descriptor& d);
Descriptor descriptor_from_json(const std::string& text);
bool looks_like_descriptor(const std::string& text);

// Builds the symmetric configuration a descriptor records; for the
// line-circle family this is the exact pre-image.
SymmetricConfig realize(const Descriptor& d);

// Seed-determined random rational points, pairwise distinct.
PointSet seeded_random_points(std::uint64_t seed, std::size_t n);

}  // namespace occ
