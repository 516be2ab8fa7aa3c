#include <doctest.h>

#include "starconf/explore.hpp"
#include "starconf/suites.hpp"

using namespace starconf;

namespace {

SuiteOptions small(std::uint64_t seed, std::size_t trials) {
  SuiteOptions o;
  o.seed = seed;
  o.trials = trials;
  return o;
}

// Every trial passed and, where a control was recorded, it had teeth.
void check_report(const SuiteReport& report) {
  CHECK(report.pass());
  for (const auto& t : report.trials) {
    CHECK(t.error.empty());
    for (const auto& [name, value] : t.checks.items())
      if (value.is_boolean()) CHECK_MESSAGE(value.get<bool>(), report.id, " trial ", t.index, " check ", name);
  }
}

}  // namespace

TEST_CASE("ranges") {
  const Range one = Range::parse("5");
  CHECK(one.lo == 5);
  CHECK(one.hi == 5);
  const Range span = Range::parse("2..8");
  CHECK(span.lo == 2);
  CHECK(span.hi == 8);
  CHECK_THROWS_AS(Range::parse("8..2"), Error);
  CHECK_THROWS_AS(Range::parse("a..2"), Error);
  CHECK_THROWS_AS(Range::parse(""), Error);
}

TEST_CASE("suite ids") {
  CHECK(suite_ids().size() == 14);
  CHECK(is_suite_id("thm2.1"));
  CHECK_FALSE(is_suite_id("thm9.9"));
  CHECK_THROWS_AS(run_suite("thm9.9", SuiteOptions{}), Error);
}

TEST_CASE("every suite passes a small run") {
  for (const auto& id : suite_ids()) {
    SuiteOptions o = small(3, 2);
    if (id == "thm4.2" || id == "thm4.5") o.r = Range::parse("2..4");
    if (id == "thm3.1b" || id == "thm3.1e") o.r = Range::parse("3..5");
    if (id == "prop4.4") o.r = Range::parse("1..3");
    const auto report = run_suite(id, o);
    CAPTURE(id);
    CHECK(!report.trials.empty());
    check_report(report);
    const Json j = report.to_json();
    CHECK(j["verdict"] == "PASS");
    CHECK(j["seed"] == 3);
    CHECK_FALSE(j.contains("first_failure"));
  }
}

TEST_CASE("reports are deterministic") {
  for (const char* id : {"thm2.1", "prop5.3", "thm3.1d"}) {
    const auto a = run_suite(id, small(99, 3)).to_json().dump();
    const auto b = run_suite(id, small(99, 3)).to_json().dump();
    CHECK(a == b);
    CHECK(a != run_suite(id, small(100, 3)).to_json().dump());
  }
}

TEST_CASE("trial seeds derive from the suite seed and index") {
  const auto report = run_suite("brianchon", small(5, 4));
  REQUIRE(report.trials.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report.trials[i].index == i);
    CHECK(report.trials[i].seed == mix_seed(5, i));
  }
}

TEST_CASE("suite parameters are honored") {
  SuiteOptions o = small(4, 1);
  o.r = Range::parse("6");
  o.s = Range::parse("2");
  const auto lem = run_suite("lem3.6", o);
  check_report(lem);
  for (const auto& t : lem.trials) {
    CHECK(t.instance["r"] == 6);
    CHECK(t.instance["s"] == 2);
  }
  SuiteOptions d = small(4, 1);
  d.r = Range::parse("4");
  d.line_index = 2;
  check_report(run_suite("thm3.1d", d));
  SuiteOptions bad = small(4, 1);
  bad.r = Range::parse("1");
  CHECK_THROWS_AS(run_suite("thm4.2", bad), Error);
}

TEST_CASE("conjectured two-star h-vector") {
  CHECK(conjectured_two_star_hvector(3, 4, 4) == HVector{1, 3, 3, 1});
  CHECK(conjectured_two_star_hvector(2, 7, 3) == HVector{1, 2, 3, 4, 5, 6, 2, 1});
  CHECK(conjectured_two_star_hvector(3, 5, 4) == HVector{1, 3, 6, 3, 1});
  CHECK_THROWS_AS(conjectured_two_star_hvector(3, 4, 2), Error);
}

TEST_CASE("conj4.7 campaign reproduces the five-star mismatch") {
  CampaignConfig c;
  c.conjecture = "conj4.7";
  c.trials = 2;
  c.seed = 8;
  c.sizes = {3, 3, 3, 3, 3};
  const Json out = run_campaign(c);
  CHECK(out["agreements"] == 0);
  REQUIRE(out["mismatches"].size() == 2);
  for (const auto& m : out["mismatches"]) {
    CHECK(m["h_stars"] == Json::parse("[1,2,3,4,5]"));
    CHECK(m["h_fat"] == Json::parse("[1,2,3,4,4,1]"));
  }
  CHECK(out.contains("sampling"));
}

TEST_CASE("conj4.7 agrees for three stars") {
  CampaignConfig c;
  c.conjecture = "conj4.7";
  c.trials = 4;
  c.seed = 9;
  c.s = Range::parse("3");
  c.r = Range::parse("2..4");
  const Json out = run_campaign(c);
  CHECK(out["agreements"] == 4);
}

TEST_CASE("conj6.1 campaign in P^3") {
  CampaignConfig c;
  c.conjecture = "conj6.1";
  c.trials = 2;
  c.seed = 10;
  c.n = Range::parse("3");
  c.r = Range::parse("4");
  c.s = Range::parse("4");
  const Json out = run_campaign(c);
  CHECK(out["agreements"] == 2);
  for (const auto& t : out["trials"]) {
    CHECK(t["h"] == Json::parse("[1,3,3,1]"));
    CHECK(t["gorenstein"] == true);
  }
  CHECK(run_campaign(c).dump() == out.dump());
  c.conjecture = "conj9.9";
  CHECK_THROWS_AS(run_campaign(c), Error);
}
