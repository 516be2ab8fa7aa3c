#include <doctest.h>

#include "starconf/certificates.hpp"
#include "starconf/linalg.hpp"
#include "starconf/polygon.hpp"
#include "starconf/suites.hpp"

using namespace starconf;

namespace {

std::vector<Param> params_of(std::initializer_list<long> ts) {
  std::vector<Param> out;
  for (long t : ts) out.push_back(param_from(Rational(t)));
  return out;
}

// Moves vertex k to a fresh random point.
std::vector<ProjPoint> perturbed(Rng& rng, std::vector<ProjPoint> v, std::size_t k) {
  for (;;) {
    const ProjPoint p = random_point(rng, 2, 30);
    if (std::find(v.begin(), v.end(), p) != v.end()) continue;
    v[k] = p;
    return v;
  }
}

HomForm random_conic(Rng& rng) {
  const auto pts = random_general_points(rng, 2, 5);
  return conic_through_five(pts);
}

// A random conic through p: fit through p and four random points.
HomForm conic_through(Rng& rng, const ProjPoint& p) {
  for (;;) {
    auto pts = random_general_points(rng, 2, 4);
    pts.push_back(p);
    try {
      return conic_through_five(pts);
    } catch (const DegenerateConfiguration&) {
    }
  }
}

std::size_t coefficient_rank(std::initializer_list<HomForm> forms) {
  RatMatrix m;
  for (const auto& f : forms) {
    const auto v = f.coefficient_vector();
    m.append_row(v);
  }
  return rank(m);
}

}  // namespace

TEST_CASE("circumscribed polygons") {
  const auto v = circumscribed_polygon(params_of({0, 1, 2}));
  REQUIRE(v.size() == 3);
  CHECK(v[0] == ProjPoint{2, 1, 0});
  CHECK(v[1] == ProjPoint{2, 3, 4});
  CHECK(v[2] == ProjPoint{1, 1, 0});
}

TEST_CASE("Brianchon") {
  const auto hex = params_of({0, 1, 2, 3, 4, 5});
  CHECK(brianchon_check(hex));
  CHECK(hexagon_diagonals_concurrent(circumscribed_polygon(hex)));
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ps = random_params(rng, 6);
    CHECK(brianchon_check(ps));
    CHECK_FALSE(hexagon_diagonals_concurrent(perturbed(rng, circumscribed_polygon(ps), 0)));
  }
}

TEST_CASE("pencil intersection") {
  Rng rng(82);
  const HomForm g1 = random_conic(rng), g2 = random_conic(rng), g3 = random_conic(rng), g4 = random_conic(rng);
  const auto same = pencil_intersection_check(g1, g3, g1, g4);
  CHECK(same.verdict);
  CHECK(same.rank <= 3);
  const auto generic = pencil_intersection_check(g1, g3, g2, g4);
  CHECK_FALSE(generic.verdict);
  CHECK(generic.rank == 4);
  CHECK_FALSE(generic.common);
}

TEST_CASE("three conics through a point") {
  Rng rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    const ProjPoint p = random_point(rng, 2, 20);
    const auto planted = three_conics_concurrent(conic_through(rng, p), conic_through(rng, p), conic_through(rng, p));
    CHECK(planted.verdict);
    CHECK(planted.sub_verdicts.size() == 3);
    const auto generic = three_conics_concurrent(random_conic(rng), random_conic(rng), random_conic(rng));
    CHECK_FALSE(generic.verdict);
  }
  const HomForm x = HomForm::variable(3, 0), y = HomForm::variable(3, 1);
  CHECK_THROWS_AS(three_conics_concurrent(x * y, x * x, y * y), Error);
}

TEST_CASE("residual collinearity degenerate inputs") {
  Rng rng(84);
  const HomForm g = random_conic(rng);
  const ProjPoint excluded[] = {ProjPoint{1, 2, 3}, ProjPoint{5, 1, 1}};
  CHECK(residual_collinearity_check(g, g, ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, excluded));
  const ProjPoint on_line[] = {ProjPoint{1, 1, 0}};
  CHECK_THROWS_AS(residual_collinearity_check(g, g, ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, on_line),
                  DegenerateConfiguration);
}

TEST_CASE("property: octagon statements hold and perturbed octagons fail") {
  Rng rng(85);
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = circumscribed_polygon(random_params(rng, 8));
    CHECK(octagon_residual_collinearity(a));
    const auto pencil = octagon_pencil_check(a);
    CHECK(pencil.verdict);
    CHECK(pencil.rank <= 3);
    REQUIRE(pencil.common);
    // The common member lies in both pencils.
    const auto c = octagon_conics(a);
    CHECK(coefficient_rank({*pencil.common, c.g1, c.g3}) == 2);
    CHECK(coefficient_rank({*pencil.common, c.g2, c.g4}) == 2);

    const auto bad = perturbed(rng, a, 3);
    CHECK_FALSE(octagon_residual_collinearity(bad));
    CHECK_FALSE(octagon_pencil_check(perturbed(rng, a, 2)).verdict);
  }
}

TEST_CASE("property: conics through pairs of three triangle stars are concurrent") {
  Rng rng(86);
  const RNC conic = RNC::standard(2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto ps = random_params(rng, 9);
    auto star = [&](std::size_t at) {
      return contact_star(conic, std::vector<Param>(ps.begin() + at, ps.begin() + at + 3)).points;
    };
    const PointSet x1 = star(0), x2 = star(3), x3 = star(6);
    const auto g12 = points_on_common_conic(x1.united(x2));
    const auto g13 = points_on_common_conic(x1.united(x3));
    const auto g23 = points_on_common_conic(x2.united(x3));
    REQUIRE(g12);
    REQUIRE(g13);
    REQUIRE(g23);
    const auto res = three_conics_concurrent(*g12, *g13, *g23, 1000 + trial);
    for (bool b : res.sub_verdicts) CHECK(b);
  }
}
