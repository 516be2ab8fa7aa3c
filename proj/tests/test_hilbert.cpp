#include <doctest.h>

#include <numeric>

#include "starconf/hadamard.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/linalg.hpp"
#include "starconf/rnc.hpp"
#include "starconf/suites.hpp"

using namespace starconf;

namespace {

PointSet contact_union(std::initializer_list<std::vector<long>> stars) {
  const RNC conic = RNC::standard(2);
  PointSet out(2);
  for (const auto& ts : stars) {
    std::vector<Param> ps;
    for (long t : ts) ps.push_back(param_from(Rational(t)));
    out = out.united(contact_star(conic, ps).points);
  }
  return out;
}

std::vector<long> iota_params(long from, long count) {
  std::vector<long> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), from);
  return v;
}

FatScheme random_fat(Rng& rng, std::vector<unsigned> mults) {
  const auto pts = random_general_points(rng, 2, mults.size());
  FatScheme z(2);
  for (std::size_t i = 0; i < mults.size(); ++i) z.add(pts[i], mults[i]);
  return z;
}

std::vector<Hyperplane> general_lines(Rng& rng, std::size_t count) {
  std::vector<Hyperplane> out;
  for (const auto& p : random_general_points(rng, 2, count)) out.push_back(dual_line(p));
  return out;
}

}  // namespace

TEST_CASE("h-vector basics") {
  const HVector h{1, 2, 3, 0, 0};
  CHECK(h.size() == 3);
  CHECK(h.degree() == 6);
  CHECK(h[7] == 0);
  CHECK(h.to_string() == "(1,2,3)");
  CHECK(HVector{1, 2, 1}.symmetric());
  CHECK_FALSE(HVector{1, 2}.symmetric());
  CHECK(CIType(4, 2) == CIType(2, 4));
}

TEST_CASE("conditions matrices") {
  FatScheme one(2);
  one.add(ProjPoint{2, 3, 5}, 1);
  const IntMatrix m = conditions_matrix(one, 1);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 3);
  CHECK(m == IntMatrix::from_rows({{2, 3, 5}}));

  FatScheme dbl(2);
  dbl.add(ProjPoint{0, 0, 1}, 2);
  CHECK(conditions_matrix(dbl, 1).rows() == 3);
  CHECK(conditions_matrix(dbl, 3).rows() == 3);
  CHECK(rank(conditions_matrix(dbl, 1)) == 3);
  CHECK(ideal_slice(dbl, 1).empty());
  CHECK(hilbert_function(dbl, 0) == 1);
  CHECK(hilbert_function(dbl, 1) == 3);
}

TEST_CASE("Hilbert function of one point") {
  FatScheme one(3);
  one.add(ProjPoint{1, 2, 3, 4}, 1);
  for (unsigned d = 0; d < 5; ++d) CHECK(hilbert_function(one, d) == 1);
  CHECK(h_vector(one) == HVector{1});
}

TEST_CASE("h-vectors of stars and contact stars") {
  const PointSet star5 = contact_union({iota_params(0, 5)});
  CHECK(h_vector(star5) == HVector{1, 2, 3, 4});
  const PointSet u = contact_union({iota_params(0, 7), iota_params(10, 3)});
  CHECK(h_vector(u) == HVector{1, 2, 3, 4, 5, 6, 2, 1});
}

TEST_CASE("five general double points") {
  Rng rng(61);
  const FatScheme z = random_fat(rng, {2, 2, 2, 2, 2});
  const auto table = hilbert_table(z);
  CHECK(table.h == HVector{1, 2, 3, 4, 4, 1});
  CHECK(table.values == std::vector<std::uint64_t>{1, 3, 6, 10, 14, 15});
}

TEST_CASE("ideal slices") {
  Rng rng(62);
  const auto five = random_general_points(rng, 2, 5);
  const auto conics = ideal_slice(PointSet(2, five), 2);
  REQUIRE(conics.size() == 1);
  for (const auto& p : five) CHECK(conics[0].eval(p.coords()) == 0);

  const LineParam line = LineParam::from_plane_line(Hyperplane{1, 1, -1});
  PointSet x(2), y(2);
  for (long v : {1, 2, 3, 4}) x.insert(line.chart_point(Rational(v)));
  for (long v : {-1, -2, -3}) y.insert(line.chart_point(Rational(v)));
  const PointSet nine = sqfree_had_power(x, 2).united(sqfree_had_power(y, 2));
  CHECK(ideal_slice(nine, 3).size() == 2);
  CHECK(h_vector(nine) == HVector{1, 2, 3, 2, 1});
}

TEST_CASE("same_span") {
  const HomForm x = HomForm::variable(3, 0), y = HomForm::variable(3, 1), z = HomForm::variable(3, 2);
  CHECK(same_span({x, y}, {x + y, x - y}));
  CHECK_FALSE(same_span({x, y}, {x, z}));
}

TEST_CASE("closed forms") {
  CHECK(generic_star_hvector(5, 2) == HVector{1, 2, 3, 4});
  CHECK(generic_star_hvector(3, 3) == HVector{1});
  CHECK(generic_star_hvector(4, 3) == HVector{1, 3});
  CHECK(two_fat_hvector(6, 2) == HVector{1, 2, 3, 4, 5, 6, 2, 1});
  CHECK(two_fat_hvector(2, 6) == HVector{1, 2, 3, 4, 5, 6, 2, 1});
  CHECK(two_fat_hvector(4, 0) == HVector{1, 2, 3, 4});
  CHECK(two_fat_hvector(3, 3) == HVector{1, 2, 3, 3, 2, 1});
  CHECK(star_difference_hvector(3, 3) == HVector{1, 2, 3, 3, 3});
  CHECK(star_difference_hvector(4, 1) == HVector{1, 1, 1, 1});
  CHECK(ci_hvector(CIType(3, 3)) == HVector{1, 2, 3, 2, 1});
  CHECK(ci_hvector(CIType(1, 4)) == HVector{1, 1, 1, 1});
  CHECK(ci_hvector(CIType(3, 4)) == HVector{1, 2, 3, 3, 2, 1});
}

TEST_CASE("liaison") {
  CHECK(liaison_linked_hvector(CIType(6, 6), HVector{1, 2, 3, 3, 3}) == HVector{1, 2, 3, 4, 5, 6, 2, 1});
  CHECK(liaison_linked_hvector(CIType(3, 3), ci_hvector(CIType(3, 3))).empty());
  CHECK(liaison_linked_hvector(CIType(3, 4), HVector{1, 2, 3, 3, 2, 1}).empty());
  CHECK_THROWS_WITH_AS(liaison_linked_hvector(CIType(2, 2), HVector{1, 2, 3}), "X not linkable inside CI(2,2)",
                       Error);
}

TEST_CASE("three fat points") {
  for (unsigned d = 1; d < 4; ++d) CHECK(three_fat_hilbert({1, 1, 1}, d) == 3);
  CHECK(three_fat_hvector({3, 1, 1}) == HVector{1, 2, 3, 2});
  CHECK(three_fat_hvector({5, 2, 2}) == HVector{1, 2, 3, 4, 5, 4, 2});
  CHECK(three_fat_3had_hvector(3, 3, 6) == HVector{1, 2, 3, 4, 5, 4, 2});
  CHECK(three_fat_3had_hvector(2, 2, 4) == HVector{1, 2, 3, 2});
  CHECK(three_fat_3had_hvector(4, 2, 6) == HVector{1, 2, 3, 4, 5, 4, 2, 1});
  CHECK_THROWS_AS(three_fat_3had_hvector(3, 3, 9), Error);
  CHECK_THROWS_AS(three_fat_3had_hvector(2, 3, 5), Error);
}

TEST_CASE("star difference against constructed stars") {
  Rng rng(63);
  for (auto [s, t] : {std::pair{3u, 3u}, {2u, 4u}, {4u, 2u}, {3u, 1u}}) {
    const auto lines = general_lines(rng, s + t);
    const PointSet big = star_configuration(lines);
    const PointSet small = star_configuration(std::span(lines).first(s));
    CHECK(h_vector(big.minus(small)) == star_difference_hvector(s, t));
  }
}

TEST_CASE("property: two fat points by rank agree with the closed form") {
  Rng rng(64);
  for (int trial = 0; trial < 12; ++trial) {
    const auto m = static_cast<unsigned>(rng.uniform(1, 6)), n = static_cast<unsigned>(rng.uniform(1, 6));
    CHECK(h_vector(random_fat(rng, {m, n})) == two_fat_hvector(m, n));
  }
}

TEST_CASE("property: three fat points by rank agree with the recursion") {
  Rng rng(65);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<unsigned> mults{static_cast<unsigned>(rng.uniform(1, 5)), static_cast<unsigned>(rng.uniform(1, 5)),
                                static_cast<unsigned>(rng.uniform(1, 5))};
    const FatScheme z = random_fat(rng, mults);
    const auto table = hilbert_table(z);
    for (unsigned d = 0; d < table.values.size(); ++d) CHECK(table.values[d] == three_fat_hilbert(mults, d));
    CHECK(table.h == three_fat_hvector(mults));
  }
}

TEST_CASE("property: h-vectors sum to the degree, Hilbert functions are monotone") {
  Rng rng(66);
  for (int trial = 0; trial < 15; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
    const auto count = static_cast<std::size_t>(rng.uniform(1, 5));
    FatScheme z(n);
    for (std::size_t i = 0; i < count; ++i) z.add(random_point(rng, n, 9), static_cast<unsigned>(rng.uniform(1, 3)));
    const auto table = hilbert_table(z);
    std::uint64_t sum = 0;
    for (auto v : table.h.h) sum += v;
    CHECK(sum == z.degree());
    CHECK(table.values.back() == z.degree());
    for (std::size_t d = 1; d < table.values.size(); ++d) CHECK(table.values[d] >= table.values[d - 1]);
    CHECK(table.h[0] == 1);
  }
}

TEST_CASE("property: h-vectors are invariant under coordinate changes") {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const auto params = random_params(rng, 6);
    const RNC conic = RNC::standard(2);
    const PointSet x = contact_star(conic, std::vector<Param>(params.begin(), params.begin() + 4)).points.united(
        contact_star(conic, std::vector<Param>(params.begin() + 4, params.end())).points);
    const RatMatrix g = random_invertible(rng, 3, 5);
    PointSet moved(2);
    for (const auto& p : x) {
      const auto v = multiply(g, to_rationals(p.coords()));
      moved.insert(ProjPoint(std::span<const Rational>(v)));
    }
    CHECK(h_vector(moved) == h_vector(x));
  }
}
