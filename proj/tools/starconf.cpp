// starconf: construct contact star configurations, compute h-vectors, run
// verification suites and exploration campaigns, export SVG figures.
//
// Exit codes: 0 success / all trials pass, 1 a property failed, 2 bad usage
// or input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "starconf/certificates.hpp"
#include "starconf/explore.hpp"
#include "starconf/hadamard.hpp"
#include "starconf/json_io.hpp"
#include "starconf/polygon.hpp"
#include "starconf/rnc.hpp"
#include "starconf/suites.hpp"
#include "starconf/svg.hpp"

using namespace starconf;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STARCONF_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("STARCONF_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << text;
}

void emit(const Json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

Json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream f(path);
    if (!f) throw Error("cannot read " + path);
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep))
    if (!part.empty()) out.push_back(part);
  return out;
}

std::vector<Param> parse_params(const std::string& text) {
  std::vector<Param> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_param(p));
  return out;
}

LineParam line_from_flags(const std::string& line, const std::string& through, std::size_t n) {
  if (!through.empty()) {
    const auto parts = split(through, ';');
    if (parts.size() != 2) throw Error("--through expects two points separated by ';'");
    const ProjPoint p = parse_point(parts[0]), q = parse_point(parts[1]);
    if (p.dim() != q.dim()) throw Error("--through points live in different spaces");
    return LineParam(p, q);
  }
  if (!line.empty()) {
    if (n != 2) throw Error("--line describes a line of the plane; use --through in P^n");
    return LineParam::from_plane_line(parse_linear_form(line, 2));
  }
  throw Error("give the line with --line or --through");
}

Json line_json(const LineParam& line) {
  Json out;
  out["base"] = {to_json(line.p()), to_json(line.q())};
  if (line.ambient_dim() == 2) out["equation"] = to_json(line_through(line.p(), line.q()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact star configurations: constructions, h-vectors and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  std::uint64_t seed = 0;
  bool timing = false;
  app.add_option("--out,-o", out, "Output path (default stdout)");
  app.add_option("--seed", seed, "Random seed (default $STARCONF_SEED or 1)");
  app.add_flag("--timing", timing, "Print wall time to stderr");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a configuration and print it as JSON");
  construct->require_subcommand(1);
  construct->fallthrough();
  unsigned n = 2;
  std::vector<std::string> param_lists;
  std::size_t random_count = 0;
  auto* cstar = construct->add_subcommand("contact-star", "Contact star(s) on the standard rational normal curve");
  cstar->add_option("--n", n, "Ambient dimension")->check(CLI::Range(1u, 12u));
  cstar->add_option("--params", param_lists, "Tangency parameters t, p/q, a:b or inf; repeat for several stars");
  cstar->add_option("--random", random_count, "Draw this many random parameters instead");

  std::string line_text, through;
  std::string xs, ys;
  unsigned power = 0;
  auto* hstar = construct->add_subcommand("hadamard-star", "Square-free Hadamard powers of points on a line");
  hstar->add_option("--line", line_text, "Line of the plane, e.g. \"x+y-z\"");
  hstar->add_option("--through", through, "Line through two points, e.g. \"1,1,2,0;1,-1,0,-2\"");
  hstar->add_option("--x", xs, "Chart values v of the first set (points with x0 = 1, x1 = v)")->required();
  hstar->add_option("--y", ys, "Chart values of the second set");
  hstar->add_option("--power", power, "Hadamard power (default n)");

  std::string octagon_params;
  auto* octagon = construct->add_subcommand("octagon", "Octagon circumscribed to y^2 - xz and its conics");
  octagon->add_option("--params", octagon_params, "Eight tangency parameters (default random)");

  auto* lpow = construct->add_subcommand("line-power", "Coordinate-wise power of a line");
  lpow->add_option("--n", n, "Ambient dimension when --line is used");
  lpow->add_option("--line", line_text, "Line of the plane");
  lpow->add_option("--through", through, "Line through two points");
  lpow->add_option("--x", xs, "Chart values of points to map onto the curve");

  // hvector
  auto* hvec = app.add_subcommand("hvector", "h-vector and Hilbert function of a point set or fat scheme");
  std::string in_path;
  std::string fat;
  hvec->add_option("--in,-i", in_path, "PointSet JSON (\"-\" for stdin)");
  hvec->add_option("--fat", fat, "Multiplicities of random general points, e.g. \"2,2,2,2,2\"");
  hvec->add_option("--n", n, "Ambient dimension for --fat");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  std::string suite_id;
  SuiteOptions sopt;
  std::string nr, rr, sr, tr;
  verify->add_option("id", suite_id, "Suite id")->required()->check(CLI::IsMember(suite_ids()));
  verify->add_option("--trials", sopt.trials, "Trials per parameter case");
  verify->add_option("--n", nr, "Dimension range, e.g. 2..4");
  verify->add_option("--r", rr, "Range for r (multiplicities for prop4.4)");
  verify->add_option("--s", sr, "Range for s");
  verify->add_option("--t", tr, "Range for t");
  verify->add_option("--line-index", sopt.line_index, "thm3.1d: which line of the second star cuts Z (1-based)");

  // explore
  auto* explore = app.add_subcommand("explore", "Conjecture exploration campaign");
  CampaignConfig ccfg;
  std::string sizes;
  explore->add_option("conjecture", ccfg.conjecture, "conj4.7 or conj6.1")
      ->required()
      ->check(CLI::IsMember({"conj4.7", "conj6.1"}));
  explore->add_option("--trials", ccfg.trials, "Number of samples")->check(CLI::PositiveNumber);
  explore->add_option("--n", nr, "conj6.1: dimension range");
  explore->add_option("--r", rr, "conj4.7: star sizes; conj6.1: size of the first star");
  explore->add_option("--s", sr, "conj4.7: number of stars; conj6.1: size of the second star");
  explore->add_option("--sizes", sizes, "conj4.7: fixed star sizes, e.g. 3,3,3,3,3");

  // svg
  auto* svg = app.add_subcommand("svg", "Render a plane configuration JSON as SVG");
  svg->add_option("--in,-i", in_path, "Configuration JSON (\"-\" for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    if (app.get_option("--seed")->count() == 0) seed = default_seed();

    if (*cstar) {
      const RNC curve = RNC::standard(n);
      std::vector<std::vector<Param>> stars;
      if (random_count) {
        Rng rng(seed);
        stars.push_back(random_params(rng, random_count));
      }
      for (const auto& list : param_lists) stars.push_back(parse_params(list));
      if (stars.empty()) throw Error("give --params or --random");
      Json result;
      if (stars.size() == 1) {
        result = to_json(contact_star(curve, stars.front()));
      } else {
        result["n"] = n;
        result["stars"] = Json::array();
        PointSet all(n);
        Json hs = Json::array();
        for (const auto& ps : stars) {
          const auto star = contact_star(curve, ps);
          result["stars"].push_back(to_json(star));
          for (const auto& h : star.hyperplanes) hs.push_back(to_json(h));
          all = all.united(star.points);
        }
        result["hyperplanes"] = hs;
        result["points"] = to_json(all)["points"];
      }
      if (n == 2) result["conics"] = {to_json(standard_conic())};
      emit(result, out);
    } else if (*hstar) {
      const LineParam line = line_from_flags(line_text, through, through.empty() ? 2 : 0);
      const std::size_t dim = line.ambient_dim();
      const unsigned k = power ? power : static_cast<unsigned>(dim);
      Json result;
      result["n"] = dim;
      result["line"] = line_json(line);
      result["sets"] = Json::array();
      PointSet all(dim);
      Json hyperplanes = Json::array();
      const Hyperplane lpow = k == dim ? had_power_hyperplane(line) : Hyperplane{};
      for (const auto* values : {&xs, &ys}) {
        if (values->empty()) continue;
        PointSet base(dim);
        for (const auto& v : parse_rational_list(*values)) base.insert(line.chart_point(v));
        const PointSet star = sqfree_had_power(base, k);
        Json set;
        set["chart_values"] = *values;
        set["base_points"] = to_json(base)["points"];
        set["points"] = to_json(star)["points"];
        result["sets"].push_back(set);
        all = all.united(star);
        if (k == dim)
          for (const auto& p : base) {
            const auto flat = osculating_flat_hadamard(p, line, static_cast<unsigned>(dim) - 1);
            hyperplanes.push_back(to_json(join_points(flat)));
          }
      }
      result["points"] = to_json(all)["points"];
      if (k == dim) result["hyperplanes"] = hyperplanes;
      if (dim == 2 && k == 2) result["conics"] = {to_json(implicit_square_conic(line_through(line.p(), line.q())))};
      emit(result, out);
    } else if (*octagon) {
      std::vector<Param> ps;
      if (octagon_params.empty()) {
        Rng rng(seed);
        ps = random_params(rng, 8);
      } else {
        ps = parse_params(octagon_params);
      }
      if (ps.size() != 8) throw Error("an octagon needs eight parameters");
      const auto a = circumscribed_polygon(ps);
      const auto conics = octagon_conics(a);
      const auto pencil = octagon_pencil_check(a);
      Json result;
      result["n"] = 2;
      result["params"] = Json::array();
      for (const auto& p : ps) result["params"].push_back(to_json(p));
      result["points"] = Json::array();
      for (const auto& p : a) result["points"].push_back(to_json(p));
      result["hyperplanes"] = Json::array();
      for (std::size_t i = 0; i < 8; ++i) result["hyperplanes"].push_back(to_json(line_through(a[i], a[(i + 1) % 8])));
      result["conics"] = {to_json(standard_conic()), to_json(conics.g1), to_json(conics.g2), to_json(conics.g3),
                          to_json(conics.g4)};
      result["checks"] = {{"residual_collinearity", octagon_residual_collinearity(a)},
                          {"pencil_rank", pencil.rank},
                          {"pencil_common_conic", pencil.common ? to_json(*pencil.common) : Json()}};
      emit(result, out);
    } else if (*lpow) {
      const LineParam line = line_from_flags(line_text, through, through.empty() ? n : 0);
      const std::size_t dim = line.ambient_dim();
      const auto cp = coordinate_power_line(line, static_cast<unsigned>(dim));
      Json result;
      result["n"] = dim;
      result["line"] = line_json(line);
      result["forms"] = to_json(cp.forms);
      result["is_rnc"] = cp.is_rnc;
      result["avoids_delta"] = dim >= 2 ? line_avoids_delta(line, static_cast<unsigned>(dim) - 2) : true;
      result["hadamard_hyperplane"] = to_json(had_power_hyperplane(line));
      if (dim == 2) result["conics"] = {to_json(implicit_square_conic(line_through(line.p(), line.q())))};
      if (!xs.empty()) {
        Json pts = Json::array(), osc = Json::array(), base = Json::array();
        for (const auto& v : parse_rational_list(xs)) {
          const ProjPoint p = line.chart_point(v);
          base.push_back(to_json(p));
          pts.push_back(to_json(had_power(p, static_cast<unsigned>(dim))));
          osc.push_back(to_json(join_points(osculating_flat_hadamard(p, line, static_cast<unsigned>(dim) - 1))));
        }
        result["base_points"] = base;
        result["points"] = pts;
        result["hyperplanes"] = osc;
      }
      emit(result, out);
    } else if (*hvec) {
      FatScheme z(n);
      Json result;
      if (!fat.empty()) {
        std::vector<unsigned> mults;
        for (const auto& m : split(fat, ',')) mults.push_back(static_cast<unsigned>(std::stoul(m)));
        Rng rng(seed);
        const auto pts = random_general_points(rng, n, mults.size());
        for (std::size_t i = 0; i < pts.size(); ++i) z.add(pts[i], mults[i]);
        result["seed"] = seed;
        result["points"] = Json::array();
        for (const auto& p : pts) result["points"].push_back(to_json(p));
        result["multiplicities"] = mults;
      } else {
        z = fat_scheme_from_json(read_json(in_path));
      }
      const auto table = hilbert_table(z);
      const Json hj = to_json(table);
      for (const auto& [k, v] : hj.items()) result[k] = v;
      emit(result, out);
    } else if (*verify) {
      sopt.seed = seed;
      if (!nr.empty()) sopt.n = Range::parse(nr);
      if (!rr.empty()) sopt.r = Range::parse(rr);
      if (!sr.empty()) sopt.s = Range::parse(sr);
      if (!tr.empty()) sopt.t = Range::parse(tr);
      const auto report = run_suite(suite_id, sopt);
      emit(report.to_json(), out);
      std::cerr << suite_id << ": " << (report.pass() ? "PASS" : "FAIL") << "\n";
      status = report.pass() ? 0 : 1;
    } else if (*explore) {
      ccfg.seed = seed;
      if (!nr.empty()) ccfg.n = Range::parse(nr);
      if (!rr.empty()) ccfg.r = Range::parse(rr);
      if (!sr.empty()) ccfg.s = Range::parse(sr);
      for (const auto& m : split(sizes, ',')) ccfg.sizes.push_back(static_cast<unsigned>(std::stoul(m)));
      emit(run_campaign(ccfg), out);
    } else if (*svg) {
      emit(render_svg(read_json(in_path)), out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "wall time: " << secs << " s\n";
  }
  return status;
}
