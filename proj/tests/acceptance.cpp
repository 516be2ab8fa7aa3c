// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "starconf/certificates.hpp"
#include "starconf/explore.hpp"
#include "starconf/hadamard.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/rnc.hpp"
#include "starconf/suites.hpp"

using namespace starconf;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.note.empty()) o.note += "; ";
    o.note += what;
  }
}

void expect_suite(Outcome& o, std::string_view id, SuiteOptions opt, std::size_t expected_trials) {
  const SuiteReport report = run_suite(id, opt);
  std::size_t passed = 0;
  for (const auto& t : report.trials) passed += t.pass ? 1 : 0;
  expect(o, report.trials.size() == expected_trials,
         std::string(id) + " ran " + std::to_string(report.trials.size()) + " trials");
  expect(o, report.pass(), std::string(id) + " " + std::to_string(passed) + "/" + std::to_string(report.trials.size()));
}

SuiteOptions opts(std::size_t trials, const char* r = nullptr, const char* s = nullptr, const char* n = nullptr) {
  SuiteOptions o;
  o.seed = 20240601;
  o.trials = trials;
  if (r) o.r = Range::parse(r);
  if (s) o.s = Range::parse(s);
  if (n) o.n = Range::parse(n);
  return o;
}

PointSet chart_set(const LineParam& line, std::initializer_list<long> values) {
  PointSet out(line.ambient_dim());
  for (long v : values) out.insert(line.chart_point(Rational(v)));
  return out;
}

HomForm term(std::size_t vars, Exponent e, const Rational& c) {
  unsigned d = 0;
  for (auto v : e) d += v;
  HomForm f(vars, d);
  f.add_term(e, c);
  return f;
}

PointSet contact_union(const std::vector<std::vector<long>>& stars) {
  PointSet out(2);
  for (const auto& ts : stars) {
    std::vector<Param> ps;
    for (long t : ts) ps.push_back(param_from(Rational(t)));
    out = out.united(contact_star(RNC::standard(2), ps).points);
  }
  return out;
}

HVector fat_hvector(std::vector<unsigned> mults, std::uint64_t seed) {
  Rng rng(seed);
  const auto pts = random_general_points(rng, 2, mults.size());
  FatScheme z(2);
  for (std::size_t i = 0; i < mults.size(); ++i) z.add(pts[i], mults[i]);
  return h_vector(z);
}

Outcome nine_point_ci() {
  Outcome o;
  const LineParam line = LineParam::from_plane_line(Hyperplane{1, 1, -1});
  const PointSet x = chart_set(line, {1, 2, 3, 4}), y = chart_set(line, {-1, -2, -3});
  expect(o, x == PointSet(2, {{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}}), "X differs from the listed points");
  expect(o, y == PointSet(2, {{1, -1, 0}, {1, -2, -1}, {1, -3, -2}}), "Y differs from the listed points");
  const PointSet nine = sqfree_had_power(x, 2).united(sqfree_had_power(y, 2));
  const PointSet listed(2, {{1, 2, 6}, {1, 3, 8}, {1, 4, 10}, {1, 6, 12}, {1, 8, 15}, {1, 12, 20}, {1, 2, 0}, {1, 3, 0},
                            {1, 6, 2}});
  expect(o, nine == listed, "nine points differ");
  const auto cert = ci_certificate(nine, CIType(3, 3));
  expect(o, cert.verified && verify_certificate(nine, cert), "no CI(3,3) certificate");
  expect(o, h_vector(nine) == HVector{1, 2, 3, 2, 1}, "h = " + h_vector(nine).to_string());
  return o;
}

Outcome coordinate_power_suite() {
  Outcome o;
  expect_suite(o, "thm2.1", opts(25, nullptr, nullptr, "2..4"), 75);
  return o;
}

Outcome square_conic_formula() {
  Outcome o;
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const long alpha = rng.uniform_nonzero(-12, 12), beta = rng.uniform_nonzero(-12, 12);
    const Rational a2 = alpha * alpha, b2 = beta * beta;
    // (alpha^2 x + beta^2 y - z)^2 - 4 alpha^2 beta^2 x y
    const HomForm inner = term(3, {1, 0, 0}, a2) + term(3, {0, 1, 0}, b2) + term(3, {0, 0, 1}, -1);
    const HomForm formula = inner * inner - term(3, {1, 1, 0}, 4 * a2 * b2);
    const Hyperplane ell{alpha, beta, -1};
    expect(o, proportional(implicit_square_conic(ell), formula),
           "formula mismatch at alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta));
    // Independent check: the formula vanishes on squares of points of the line.
    const LineParam line = LineParam::from_plane_line(ell);
    std::vector<ProjPoint> squares;
    for (long v = 1; v <= 5; ++v) squares.push_back(had_power(line.point_at(v, 11 - 2 * v), 2));
    for (const auto& p : squares) expect(o, formula.eval(p.coords()) == 0, "formula misses a square");
    expect(o, proportional(conic_through_five(squares), formula), "five-point fit differs");
  }
  return o;
}

Outcome ci_unions() {
  Outcome o;
  expect_suite(o, "thm3.1b", opts(10, "3..7"), 50);
  expect_suite(o, "thm3.1e", opts(10, "3..7"), 50);
  return o;
}

Outcome slice_equality() {
  Outcome o;
  expect_suite(o, "thm3.1d", opts(5, "3..5"), 15);
  return o;
}

Outcome non_ci_refutation() {
  Outcome o;
  // trials = 0: ten random (r, s) pairs spread over r = 4..8.
  expect_suite(o, "lem3.6", opts(0), 10);
  return o;
}

Outcome two_fat_points() {
  Outcome o;
  // 2 <= s <= r <= 8: 28 cases, three seeds each.
  expect_suite(o, "thm4.2", opts(3, "2..8", "2..8"), 84);
  const HVector golden{1, 2, 3, 4, 5, 6, 2, 1};
  expect(o, h_vector(contact_union({{0, 1, 2, 3, 4, 5, 6}, {-1, -2, 9}})) == golden, "r=7, s=3 union");
  expect(o, two_fat_hvector(6, 2) == golden, "two_fat_hvector(6,2)");
  expect(o, fat_hvector({6, 2}, 5) == golden, "fat points 6P + 2Q");
  return o;
}

Outcome three_fat_recursion() {
  Outcome o;
  expect_suite(o, "prop4.4", opts(1, "1..5"), 35);
  expect(o, three_fat_hvector({3, 1, 1}) == HVector{1, 2, 3, 2}, "(3,1,1) recursion");
  expect(o, fat_hvector({3, 1, 1}, 6) == HVector{1, 2, 3, 2}, "(3,1,1) rank");
  expect(o, three_fat_hvector({5, 2, 2}) == HVector{1, 2, 3, 4, 5, 4, 2}, "(5,2,2) recursion");
  expect(o, fat_hvector({5, 2, 2}, 7) == HVector{1, 2, 3, 4, 5, 4, 2}, "(5,2,2) rank");
  return o;
}

Outcome three_star_unions() {
  Outcome o;
  // r, s in 2..5 with s <= r: 10 pairs, three t values each.
  expect_suite(o, "thm4.5", opts(1, "2..5", "2..5"), 30);
  const HVector golden{1, 2, 3, 4, 5, 4, 2};
  expect(o, three_fat_3had_hvector(3, 3, 6) == golden, "closed form r=s=3, t=6");
  expect(o, fat_hvector({5, 2, 2}, 8) == golden, "fat points 5P + 2Q + 2R");
  return o;
}

Outcome five_star_counterexample() {
  Outcome o;
  CampaignConfig c;
  c.conjecture = "conj4.7";
  c.trials = 3;
  c.seed = 48;
  c.sizes = {3, 3, 3, 3, 3};
  const Json out = run_campaign(c);
  expect(o, out["mismatches"].size() == 3, "campaign did not report the mismatch");
  for (const auto& m : out["mismatches"]) {
    expect(o, m["h_stars"] == Json::parse("[1,2,3,4,5]"), "stars h = " + m["h_stars"].dump());
    expect(o, m["h_fat"] == Json::parse("[1,2,3,4,4,1]"), "fat h = " + m["h_fat"].dump());
  }
  expect(o, fat_hvector({2, 2, 2, 2, 2}, 9) == HVector{1, 2, 3, 4, 4, 1}, "five double points");
  return o;
}

Outcome circumscribed_polygons() {
  Outcome o;
  for (const char* id : {"prop5.1", "cor5.2", "prop5.3", "brianchon"}) expect_suite(o, id, opts(20), 20);
  return o;
}

Outcome gorenstein_cubes() {
  Outcome o;
  const LineParam line{ProjPoint{1, 1, 2, 0}, ProjPoint{1, -1, 0, -2}};
  const PointSet x = chart_set(line, {1, 2, 3, 4}), y = chart_set(line, {-1, -2, -3, -4});
  expect(o, x == PointSet(3, {{1, 1, 2, 0}, {1, 2, 3, 1}, {1, 3, 4, 2}, {1, 4, 5, 3}}), "X differs");
  expect(o, y == PointSet(3, {{1, -1, 0, -2}, {1, -2, -1, -3}, {1, -3, -2, -4}, {1, -4, -3, -5}}), "Y differs");
  const PointSet eight = sqfree_had_power(x, 3).united(sqfree_had_power(y, 3));
  const PointSet listed(3, {{1, 6, 24, 0}, {1, 8, 30, 0}, {1, 12, 40, 0}, {1, 24, 60, 6}, {1, -6, 0, -24},
                            {1, -8, 0, -30}, {1, -12, 0, -40}, {1, -24, -6, -60}});
  expect(o, eight == listed, "eight points differ");
  expect(o, h_vector(eight) == HVector{1, 3, 3, 1}, "h = " + h_vector(eight).to_string());
  expect(o, cb_gorenstein(eight), "not Gorenstein");
  expect_suite(o, "prop6.3", opts(10), 10);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"nine Hadamard points, CI(3,3) certificate, h = (1,2,3,2,1)", nine_point_ci},
      {"coordinate-wise powers of lines, n = 2..4, 25 lines each", coordinate_power_suite},
      {"implicit conic of a squared line, 10 random (alpha, beta)", square_conic_formula},
      {"two contact stars with s = r-1, r are complete intersections, r = 3..7", ci_unions},
      {"ideal slice equality, r = 3..5", slice_equality},
      {"non-CI refutation for r > s+1", non_ci_refutation},
      {"two contact stars vs two fat points, 2 <= s <= r <= 8", two_fat_points},
      {"three fat points: recursion vs rank, multiplicities <= 5", three_fat_recursion},
      {"three contact stars vs three fat points, r, s = 2..5", three_star_unions},
      {"five 3-line stars vs five double points mismatch", five_star_counterexample},
      {"circumscribed octagons and hexagons with negative controls", circumscribed_polygons},
      {"Hadamard cubes in P^3 are Gorenstein, tangent conic converse", gorenstein_cubes},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu: %s  %s%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.note.empty() ? "" : "  [", o.note.empty() ? "" : (o.note + "]").c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
