#include "occ/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace occ {

using nlohmann::json;

namespace {

json rational_str(const Rational& r) { return r.str(); }

Rational parse_rational(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a rational string");
  return Rational::parse(j.get<std::string>());
}

json sympos_to_json(const SymPos& p) {
  if (p.is_origin()) return json("origin");
  json j;
  j["orbit"] = p.orbit;
  if (p.doubled % 2 == 0)
    j["index"] = p.doubled / 2;
  else
    j["half_index"] = p.doubled;
  return j;
}

SymPos sympos_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "origin") return SymPos::origin();
  if (!j.is_object() || !j.contains("orbit"))
    throw std::invalid_argument("member reference must be \"origin\" or {orbit, index}");
  SymPos p;
  p.orbit = j.at("orbit").get<int>();
  if (j.contains("half_index"))
    p.doubled = j.at("half_index").get<int>();
  else
    p.doubled = 2 * j.at("index").get<int>();
  return p;
}

json interval_to_json(const Interval& v) {
  json j;
  j["lo"] = v.lo_rational().str();
  j["hi"] = v.hi_rational().str();
  return j;
}

}  // namespace

std::string point_set_to_json(const PointSet& ps) {
  json j;
  j["points"] = json::array();
  for (const AffinePoint& p : ps.affine)
    j["points"].push_back(json{{"x", rational_str(p.x)}, {"y", rational_str(p.y)}});
  if (!ps.infinity.empty()) {
    j["infinity"] = json::array();
    for (const ProjPoint& p : ps.infinity)
      j["infinity"].push_back(json{
          {"x", rational_str(p.x())}, {"y", rational_str(p.y())}, {"z", rational_str(p.z())}});
  }
  return j.dump(2) + "\n";
}

PointSet point_set_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("point set is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points"))
    throw std::invalid_argument("point set JSON needs a \"points\" array");
  PointSet ps;
  for (const json& p : j.at("points"))
    ps.affine.push_back(AffinePoint{parse_rational(p.at("x"), "x"), parse_rational(p.at("y"), "y")});
  if (j.contains("infinity"))
    for (const json& p : j.at("infinity"))
      ps.infinity.push_back(ProjPoint(parse_rational(p.at("x"), "x"),
                                      parse_rational(p.at("y"), "y"),
                                      parse_rational(p.at("z"), "z")));
  ps.validate();
  return ps;
}

std::string point_set_to_csv(const PointSet& ps) {
  if (!ps.all_affine()) throw std::invalid_argument("CSV format is affine-only");
  std::ostringstream out;
  out << "x,y\n";
  for (const AffinePoint& p : ps.affine) out << p.x.str() << "," << p.y.str() << "\n";
  return out.str();
}

PointSet point_set_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "x,y")
    throw std::invalid_argument("CSV point set needs the header \"x,y\"");
  PointSet ps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("CSV row is missing a comma");
    ps.affine.push_back(AffinePoint{Rational::parse(line.substr(0, comma)),
                                    Rational::parse(line.substr(comma + 1))});
  }
  ps.validate();
  return ps;
}

std::string point_set_to_svg(const PointSet& ps) {
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  bool first = true;
  std::vector<std::pair<double, double>> pts;
  for (const AffinePoint& p : ps.affine) {
    const double x = p.x.raw().get_d();
    const double y = p.y.raw().get_d();
    pts.emplace_back(x, y);
    if (first) {
      lo_x = hi_x = x;
      lo_y = hi_y = y;
      first = false;
    } else {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 0.05 * span;
  const double scale = 560.0 / (span + 2 * margin);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out << "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (const auto& [x, y] : pts) {
    const double sx = 20 + (x - lo_x + margin) * scale;
    const double sy = 580 - (y - lo_y + margin) * scale;  // y up
    out << "  <circle cx=\"" << sx << "\" cy=\"" << sy << "\" r=\"4\" fill=\"black\"/>\n";
  }
  // Directions at infinity are annotated, not drawn.
  if (!ps.infinity.empty())
    out << "  <text x=\"20\" y=\"24\" font-size=\"14\">" << ps.infinity.size()
        << " direction(s) at infinity omitted</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string embedded_to_json(const EmbeddedConfig& ec) {
  json j;
  j["precision"] = static_cast<long>(ec.precision);
  j["points"] = json::array();
  for (const EmbeddedMember& em : ec.points) {
    json p;
    p["member"] = sympos_to_json(em.pos);
    p["x"] = interval_to_json(em.pt.x);
    p["y"] = interval_to_json(em.pt.y);
    j["points"].push_back(std::move(p));
  }
  if (!ec.directions.empty()) {
    j["directions"] = json::array();
    for (const EmbeddedMember& em : ec.directions) {
      json p;
      p["member"] = sympos_to_json(em.pos);
      p["dx"] = interval_to_json(em.pt.x);
      p["dy"] = interval_to_json(em.pt.y);
      j["directions"].push_back(std::move(p));
    }
  }
  if (ec.inversion_center) {
    json p;
    p["member"] = sympos_to_json(ec.inversion_center->pos);
    p["x"] = interval_to_json(ec.inversion_center->pt.x);
    p["y"] = interval_to_json(ec.inversion_center->pt.y);
    j["inversion_center"] = std::move(p);
  }
  return j.dump(2) + "\n";
}

std::string curve_to_json(const HomPolyCurve& h) {
  json j;
  j["degree"] = h.degree();
  j["terms"] = json::array();
  for (const auto& [key, c] : h.terms())
    j["terms"].push_back(json{{"x", key.first}, {"y", key.second}, {"c", c.str()}});
  return j.dump(2) + "\n";
}

HomPolyCurve curve_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("curve is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("degree"))
    throw std::invalid_argument("curve JSON needs a \"degree\" field");
  HomPolyCurve h(j.at("degree").get<int>());
  if (j.contains("terms"))
    for (const json& t : j.at("terms"))
      h.add_term(t.at("x").get<int>(), t.at("y").get<int>(), parse_rational(t.at("c"), "c"));
  return h;
}

std::string descriptor_to_json(const Descriptor& d) {
  json j;
  j["family"] = d.family;
  if (d.family == "boroczky" || d.family == "modified")
    j["m"] = d.m;
  else
    j["n"] = d.n;
  j["radius_ratio"] = d.radius_ratio.str();
  j["deletions"] = json::array();
  for (const SymPos& p : d.deletions) j["deletions"].push_back(sympos_to_json(p));
  j["additions"] = json::array();
  for (const SymPos& p : d.additions) j["additions"].push_back(sympos_to_json(p));
  if (d.inversion_center_index) j["inversion_center_index"] = *d.inversion_center_index;
  return j.dump(2) + "\n";
}

Descriptor descriptor_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family"))
    throw std::invalid_argument("descriptor JSON needs a \"family\" field");
  Descriptor d;
  d.family = j.at("family").get<std::string>();
  if (j.contains("n")) d.n = j.at("n").get<int>();
  if (j.contains("m")) d.m = j.at("m").get<int>();
  if (j.contains("radius_ratio")) d.radius_ratio = parse_rational(j.at("radius_ratio"), "radius_ratio");
  if (j.contains("deletions"))
    for (const json& p : j.at("deletions")) d.deletions.push_back(sympos_from_json(p));
  if (j.contains("additions"))
    for (const json& p : j.at("additions")) d.additions.push_back(sympos_from_json(p));
  if (j.contains("inversion_center_index"))
    d.inversion_center_index = j.at("inversion_center_index").get<int>();
  return d;
}

bool looks_like_descriptor(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  return j.is_object() && j.contains("family");
}

SymmetricConfig realize(const Descriptor& d) {
  auto apply_mods = [&](SymmetricConfig c) {
    for (const SymPos& p : d.deletions) c.remove_member(p);
    for (const SymPos& p : d.additions) {
      if (p.is_origin())
        c.add_origin();
      else
        c.add_member(p);
    }
    return c;
  };
  if (d.family == "even") return apply_mods(make_even_construction(d.n, d.radius_ratio));
  if (d.family == "odd") {
    if (d.deletions.empty())
      throw std::invalid_argument("odd descriptor needs the deletion record");
    SymmetricConfig c = make_even_construction(d.n + 1, d.radius_ratio);
    for (const SymPos& p : d.deletions) c.remove_member(p);
    for (const SymPos& p : d.additions) {
      if (p.is_origin())
        c.add_origin();
      else
        c.add_member(p);
    }
    return c;
  }
  if (d.family == "boroczky" || d.family == "modified")
    return apply_mods(make_boroczky(d.m));
  if (d.family == "linecircle") {
    // The exact pre-image of the inverted construction.
    if (d.n % 2 == 0) return make_even_construction(d.n, d.radius_ratio);
    return make_odd_construction(d.n, d.radius_ratio,
                                 d.deletions.empty() ? SymPos{1, 0} : d.deletions.front());
  }
  throw std::invalid_argument("unknown configuration family: " + d.family);
}

PointSet seeded_random_points(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9999, 9999);
  std::uniform_int_distribution<long> den(1, 32);
  PointSet ps;
  std::unordered_set<AffinePoint, AffinePointHash> seen;
  while (ps.affine.size() < n) {
    const AffinePoint p{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (seen.insert(p).second) ps.affine.push_back(p);
  }
  return ps;
}

}  // namespace occ
