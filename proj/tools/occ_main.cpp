// occ: exact ordinary-line / ordinary-circle toolkit.
//
// Subcommands: generate (constructions to files), count (lines / circles /
// lines avoiding a reference point), invert (point sets), polar (curves),
// verify (golden suites), bench (brute vs inversion timing).
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include "occ/configs.hpp"
#include "occ/counting.hpp"
#include "occ/curves.hpp"
#include "occ/inversion.hpp"
#include "occ/io.hpp"
#include "occ/verify.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using occ::Rational;
using json = nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

std::vector<std::string> split_any(const std::string& s, const std::string& seps) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

occ::AffinePoint parse_affine(const std::string& s) {
  const auto parts = split_any(s, ",");
  if (parts.size() != 2) throw std::invalid_argument("expected a point as x,y: " + s);
  return occ::AffinePoint{Rational::parse(parts[0]), Rational::parse(parts[1])};
}

occ::ProjPoint parse_proj(const std::string& s) {
  const auto parts = split_any(s, ",:");
  if (parts.size() == 2)
    return occ::ProjPoint::from_affine(
        occ::AffinePoint{Rational::parse(parts[0]), Rational::parse(parts[1])});
  if (parts.size() == 3)
    return occ::ProjPoint(Rational::parse(parts[0]), Rational::parse(parts[1]),
                          Rational::parse(parts[2]));
  throw std::invalid_argument("expected a point as x,y or x:y:z: " + s);
}

occ::PointSet parse_point_set(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? occ::point_set_from_json(text) : occ::point_set_from_csv(text);
  }
  throw std::invalid_argument("empty point-set input");
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  int n = 0;
  int m = 0;
  std::string ratio = "5/7";
  std::string type;  // modified family: a..f
  int center_index = 0;
  long precision = 256;
  std::string out_path;
  std::string descriptor_path;
  std::string format = "json";
};

occ::Descriptor build_descriptor(const GenerateArgs& a) {
  occ::Descriptor d;
  d.family = a.family;
  d.radius_ratio = Rational::parse(a.ratio);
  if (a.family == "even" || a.family == "odd" || a.family == "linecircle") {
    if (a.n <= 0) throw std::invalid_argument("--n is required for the " + a.family + " family");
    d.n = a.n;
  }
  if (a.family == "boroczky" || a.family == "modified") {
    if (a.m <= 0) throw std::invalid_argument("--m is required for the " + a.family + " family");
    d.m = a.m;
  }
  if (a.family == "odd") d.deletions = {occ::SymPos{1, 0}};
  if (a.family == "linecircle") {
    d.inversion_center_index = a.center_index;
    if (a.n % 2 == 1) d.deletions = {occ::SymPos{1, 0}};
  }
  if (a.family == "modified") {
    if (a.type.empty())
      throw std::invalid_argument("--type a..f is required for the modified family");
    // Deletions name circle-orbit (0) or direction-orbit (1) members of the
    // base configuration; additions are the origin.
    switch (a.type[0]) {
      case 'a': d.deletions = {occ::SymPos{0, 0}}; break;
      case 'b': d.deletions = {occ::SymPos{1, 0}}; break;
      case 'c': d.additions = {occ::SymPos::origin()}; break;
      case 'd': break;
      case 'e': d.deletions = {occ::SymPos{1, 0}, occ::SymPos{1, 2}}; break;
      case 'f':
        d.additions = {occ::SymPos::origin()};
        d.deletions = {occ::SymPos{0, 0}};
        break;
      default: throw std::invalid_argument("unknown modification type: " + a.type);
    }
  }
  return d;
}

int run_generate(const GenerateArgs& a) {
  const occ::Descriptor d = build_descriptor(a);
  const std::string desc_text = occ::descriptor_to_json(d);

  std::string point_text;
  if (a.family == "linecircle") {
    if (a.format != "json")
      throw std::invalid_argument("the line-circle family writes interval coordinates; use json");
    point_text = occ::embedded_to_json(
        occ::make_linecircle_construction(a.n, d.radius_ratio, a.center_index));
  } else {
    const occ::SymmetricConfig c = occ::realize(d);
    if (occ::has_exact_embedding(c)) {
      const occ::PointSet ps = occ::exact_embedding(c);
      if (a.format == "json")
        point_text = occ::point_set_to_json(ps);
      else if (a.format == "csv")
        point_text = occ::point_set_to_csv(ps);
      else
        point_text = occ::point_set_to_svg(ps);
    } else {
      if (a.format != "json")
        throw std::invalid_argument(
            "configuration has no exact rational embedding; interval output needs json");
      point_text = occ::embedded_to_json(occ::embed(c, a.precision));
    }
  }

  if (!a.descriptor_path.empty())
    emit(a.descriptor_path, desc_text);
  else if (!a.out_path.empty())
    emit(a.out_path + ".descriptor.json", desc_text);
  else
    emit("", desc_text);

  if (!a.out_path.empty()) emit(a.out_path, point_text);
  return 0;
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
  std::string input;
  std::string what = "circles";
  std::string algorithm = "brute";
  std::string q;
  std::string out_path;
};

json circle_report_body(const occ::CountReport& rep) {
  // Deliberately algorithm-free, so brute and inversion runs on the same
  // input produce byte-identical bodies.
  json j;
  j["n"] = rep.n;
  j["ordinary_circles"] = rep.ordinary;
  j["per_point"] = rep.per_point;
  return j;
}

int run_count_on_set(const CountArgs& a, const occ::PointSet& ps) {
  json out;
  if (a.what == "lines") {
    const occ::IncidenceCensus census = occ::line_census(ps);
    out["n"] = ps.size();
    out["ordinary_lines"] = census.with_multiplicity(2);
    out["three_point_lines"] = census.with_multiplicity(3);
  } else if (a.what == "circles") {
    occ::CountReport rep;
    if (a.algorithm == "brute")
      rep = occ::ordinary_circles_brute(ps);
    else if (a.algorithm == "inversion")
      rep = occ::ordinary_circles_by_inversion(ps);
    else
      throw std::invalid_argument("the symmetric algorithm needs a configuration descriptor");
    out = circle_report_body(rep);
  } else if (a.what == "olq") {
    if (a.q.empty()) throw std::invalid_argument("--what olq needs --q x,y[,z]");
    const occ::ProjPoint q = parse_proj(a.q);
    out["n"] = ps.size();
    out["q"] = {q.x().str(), q.y().str(), q.z().str()};
    out["ordinary_lines_avoiding"] = occ::non_q_ordinary_lines(ps, q);
  } else {
    throw std::invalid_argument("unknown --what: " + a.what);
  }
  emit(a.out_path, out.dump(2) + "\n");
  return 0;
}

int run_count(const CountArgs& a) {
  const std::string text = slurp(a.input);
  if (!occ::looks_like_descriptor(text)) return run_count_on_set(a, parse_point_set(text));

  const occ::SymmetricConfig c = occ::realize(occ::descriptor_from_json(text));
  if (a.algorithm != "symmetric") {
    // brute / inversion on a descriptor: run on the exact embedding.
    return run_count_on_set(a, occ::exact_embedding(c));
  }
  if (a.what == "olq")
    throw std::invalid_argument("--what olq needs a point-set input and an explicit --q point");
  const occ::SymmetricReport rep = occ::count_symmetric(c);
  json out;
  if (a.what == "lines") {
    out["n"] = rep.n;
    out["ordinary_lines"] = rep.ordinary_lines;
    out["three_point_lines"] = rep.three_point_lines;
  } else if (a.what == "circles") {
    if (!rep.circles)
      throw std::invalid_argument(
          "circle counts need an all-affine configuration (no direction members)");
    out = circle_report_body(*rep.circles);
  } else {
    throw std::invalid_argument("unknown --what: " + a.what);
  }
  emit(a.out_path, out.dump(2) + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// invert / polar

int run_invert(const std::string& input, const std::string& center, const std::string& format,
               const std::string& out_path) {
  const occ::PointSet ps = parse_point_set(slurp(input));
  const occ::InversionMap inv{parse_affine(center)};
  const occ::PointSet img = occ::invert_point_set(inv, ps);
  emit(out_path, format == "csv" ? occ::point_set_to_csv(img) : occ::point_set_to_json(img));
  return 0;
}

int run_polar(const std::string& curve_path, const std::string& point, const std::string& out_path) {
  const occ::HomPolyCurve h = occ::curve_from_json(slurp(curve_path));
  const auto polar = occ::polar_curve(h, parse_proj(point));
  if (!polar) throw std::invalid_argument("the polar curve vanishes identically");
  emit(out_path, occ::curve_to_json(*polar));
  return 0;
}

// ---------------------------------------------------------------------------
// verify / bench

int run_verify(const std::string& suite) {
  std::vector<occ::VerifyCheck> checks;
  if (suite == "constructions")
    checks = occ::verify_constructions();
  else if (suite == "inversion")
    checks = occ::verify_inversion();
  else if (suite == "curves")
    checks = occ::verify_curves();
  else if (suite == "theorem34")
    checks = occ::verify_theorem34();
  else
    checks = occ::verify_all();
  for (const occ::VerifyCheck& c : checks) {
    const json line{
        {"check", c.check}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
    std::cout << line.dump() << "\n";
  }
  return occ::all_pass(checks) ? 0 : 1;
}

int run_bench(const std::vector<std::size_t>& sizes, const std::string& algorithm,
              std::uint64_t seed, const std::string& out_path) {
  using Clock = std::chrono::steady_clock;
  std::ostringstream csv;
  csv << "n,algorithm,seconds,ordinary\n";
  for (std::size_t n : sizes) {
    const occ::PointSet ps = occ::seeded_random_points(seed, n);
    const auto row = [&](const char* name, occ::CountReport (*counter)(const occ::PointSet&)) {
      const auto t0 = Clock::now();
      const occ::CountReport rep = counter(ps);
      const std::chrono::duration<double> dt = Clock::now() - t0;
      csv << n << "," << name << "," << dt.count() << "," << rep.ordinary << "\n";
    };
    if (algorithm != "inversion") row("brute", occ::ordinary_circles_brute);
    if (algorithm != "brute") row("inversion", occ::ordinary_circles_by_inversion);
  }
  emit(out_path, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ordinary-line and ordinary-circle toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "construct a configuration and write its files");
  g->add_option("--family", gen.family, "even | odd | boroczky | modified | linecircle")
      ->required()
      ->check(CLI::IsMember({"even", "odd", "boroczky", "modified", "linecircle"}));
  g->add_option("--n", gen.n, "point count (even / odd / linecircle families)");
  g->add_option("--m", gen.m, "orbit size (boroczky / modified families)");
  g->add_option("--radius-ratio", gen.ratio, "second-orbit radius as p/q (default 5/7)");
  g->add_option("--type", gen.type, "modification pattern a..f (modified family)")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "f"}));
  g->add_option("--center-index", gen.center_index, "half-step inversion center (linecircle)");
  g->add_option("--precision", gen.precision, "interval precision in bits (default 256)");
  g->add_option("--out", gen.out_path, "point-set output file");
  g->add_option("--descriptor", gen.descriptor_path, "descriptor output file");
  g->add_option("--format", gen.format, "json | csv | svg (default json)")
      ->check(CLI::IsMember({"json", "csv", "svg"}));

  CountArgs cnt;
  CLI::App* c = app.add_subcommand("count", "count ordinary lines or circles");
  c->add_option("--input", cnt.input, "point-set file or configuration descriptor")->required();
  c->add_option("--what", cnt.what, "lines | circles | olq (default circles)")
      ->check(CLI::IsMember({"lines", "circles", "olq"}));
  c->add_option("--algorithm", cnt.algorithm, "brute | inversion | symmetric (default brute)")
      ->check(CLI::IsMember({"brute", "inversion", "symmetric"}));
  c->add_option("--q", cnt.q, "reference point x,y[,z] for --what olq");
  c->add_option("--out", cnt.out_path, "report output file (default stdout)");

  std::string inv_input, inv_center, inv_format = "json", inv_out;
  CLI::App* iv = app.add_subcommand("invert", "invert a point set in a unit circle");
  iv->add_option("--input", inv_input, "point-set file")->required();
  iv->add_option("--center", inv_center, "inversion center x,y")->required();
  iv->add_option("--format", inv_format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  iv->add_option("--out", inv_out, "output file (default stdout)");

  std::string pol_curve, pol_point, pol_out;
  CLI::App* pl = app.add_subcommand("polar", "polar curve at a projective point");
  pl->add_option("--curve", pol_curve, "homogeneous curve file")->required();
  pl->add_option("--point", pol_point, "pole as x:y:z or x,y")->required();
  pl->add_option("--out", pol_out, "output file (default stdout)");

  std::string suite = "all";
  CLI::App* vf = app.add_subcommand("verify", "run the golden verification suites");
  vf->add_option("--suite", suite, "constructions | inversion | curves | theorem34 | all")
      ->check(CLI::IsMember({"constructions", "inversion", "curves", "theorem34", "all"}));

  std::vector<std::size_t> bench_sizes{50, 100};
  std::string bench_algorithm = "both";
  std::uint64_t bench_seed = 1;
  std::string bench_out;
  CLI::App* bn = app.add_subcommand("bench", "time the two circle counters");
  bn->add_option("--n", bench_sizes, "point counts (comma separated)")->delimiter(',');
  bn->add_option("--algorithm", bench_algorithm, "both | brute | inversion (default both)")
      ->check(CLI::IsMember({"both", "brute", "inversion"}));
  bn->add_option("--seed", bench_seed, "random seed (default 1)");
  bn->add_option("--out", bench_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(g)) return run_generate(gen);
    if (app.got_subcommand(c)) return run_count(cnt);
    if (app.got_subcommand(iv)) return run_invert(inv_input, inv_center, inv_format, inv_out);
    if (app.got_subcommand(pl)) return run_polar(pol_curve, pol_point, pol_out);
    if (app.got_subcommand(vf)) return run_verify(suite);
    if (app.got_subcommand(bn)) return run_bench(bench_sizes, bench_algorithm, bench_seed, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
