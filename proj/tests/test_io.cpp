#include <doctest.h>

#include "starconf/json_io.hpp"
#include "starconf/suites.hpp"
#include "starconf/svg.hpp"

using namespace starconf;

TEST_CASE("points and point sets round trip") {
  const ProjPoint p{3, -6, 9};
  CHECK(to_json(p).dump() == R"(["1","-2","3"])");
  CHECK(point_from_json(to_json(p)) == p);
  CHECK(point_from_json(Json::parse("[2, 4, 6]")) == ProjPoint{1, 2, 3});
  const PointSet x(2, {{1, 2, 6}, {1, 3, 8}, {0, 1, 0}});
  CHECK(point_set_from_json(to_json(x)) == x);
  CHECK_THROWS_AS(point_set_from_json(Json::parse(R"({"points": [[1,1,1],[1,2,3,4]]})")), Error);
}

TEST_CASE("fat schemes read multiplicities") {
  const auto z = fat_scheme_from_json(Json::parse(R"({"n": 2, "points": [[1,0,0],[0,1,0]], "multiplicities": [3, 1]})"));
  CHECK(z.degree() == 7);
  CHECK_THROWS_AS(fat_scheme_from_json(Json::parse(R"({"points": [[1,0,0]], "multiplicities": [1, 2]})")), Error);
}

TEST_CASE("forms round trip") {
  HomForm f(3, 2);
  f.add_term({2, 0, 0}, Rational(1, 2));
  f.add_term({0, 1, 1}, -3);
  const Json j = to_json(f);
  CHECK(j["terms"]["2,0,0"] == "1/2");
  CHECK(form_from_json(j) == f);
  CHECK_THROWS_AS(form_from_json(Json::parse(R"({"degree": 2, "vars": 3, "terms": {"2,0": "1"}})")), Error);
}

TEST_CASE("h-vectors and tables serialize") {
  CHECK(to_json(HVector{1, 2, 1}).dump() == R"({"h":[1,2,1],"degree":4})");
  const HilbertTable t{{1, 3, 4}, HVector{1, 2, 1}};
  CHECK(to_json(t)["hilbert"] == Json::parse("[1,3,4]"));
}

TEST_CASE("text parsers") {
  CHECK(parse_linear_form("x+y-z", 2) == Hyperplane{1, 1, -1});
  CHECK(parse_linear_form("2x - 3/2 t", 3) == Hyperplane{4, 0, 0, -3});
  CHECK(parse_linear_form("x0 - x3", 3) == Hyperplane{1, 0, 0, -1});
  CHECK_THROWS_AS(parse_linear_form("x + q", 2), Error);
  CHECK_THROWS_AS(parse_linear_form("t", 2), Error);
  CHECK(parse_point("1,1,2,0") == ProjPoint{1, 1, 2, 0});
  CHECK(parse_rational_list("1, -2/4,3") == std::vector<Rational>{1, Rational(-1, 2), 3});
  CHECK_THROWS_AS(parse_point("1,,2"), Error);
}

TEST_CASE("numbers are strings, readers accept both") {
  CHECK(integer_from_json(Json("123456789012345678901234567890")) ==
        Integer("123456789012345678901234567890"));
  CHECK(integer_from_json(Json(-7)) == -7);
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), Error);
}

TEST_CASE("svg rendering") {
  const std::string empty = render_svg(Json::parse(R"({"n": 2, "points": []})"));
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);
  CHECK(empty.find("<circle") == std::string::npos);

  const Json config = Json::parse(R"({
    "n": 2,
    "points": [["1","2","6"], ["1","3","8"], ["0","1","0"]],
    "hyperplanes": [["1","1","-1"]],
    "conics": [{"degree": 2, "vars": 3, "terms": {"0,2,0": "1", "1,0,1": "-1"}}]
  })");
  const std::string svg = render_svg(config);
  std::size_t circles = 0;
  for (auto at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++circles;
  // The point at infinity is not drawn.
  CHECK(circles == 2);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg == render_svg(config));
  CHECK_THROWS_AS(render_svg(Json::parse(R"({"n": 3, "points": []})")), Error);
}
