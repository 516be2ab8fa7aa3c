#pragma once

// Randomized verification suites. Each trial draws its instance from a seed
// derived from the suite seed and the trial index, so reports are
// reproducible and independent of thread scheduling.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starconf/json_io.hpp"
#include "starconf/random.hpp"

namespace starconf {

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
  /// "5", "2..8".
  static Range parse(std::string_view text);
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Trials per parameter case; 0 selects the suite default.
  std::size_t trials = 0;
  std::optional<Range> n, r, s, t;
  /// Index (1-based) of the line of the second star used for Z in thm3.1d;
  /// 0 means the last one.
  unsigned line_index = 0;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  Json instance;
  /// Named boolean checks. Negative controls are recorded as
  /// "control_*" entries that are true when the perturbed instance fails.
  Json checks = Json::object();
  bool pass = false;
  std::string error;
};

struct SuiteReport {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;

  bool pass() const;
  Json to_json() const;
};

const std::vector<std::string>& suite_ids();
bool is_suite_id(std::string_view id);

/// Throws Error for an unknown id or invalid ranges.
SuiteReport run_suite(std::string_view id, const SuiteOptions& options);

// Instance builders shared with the exploration campaigns and tests.

/// A rational normal curve in P^n with random small integer forms.
class RNC;
RNC random_rnc(Rng& rng, unsigned n);
/// Distinct random points with coordinates in [-50, 50]; in the plane, no
/// three of them are collinear.
std::vector<ProjPoint> random_general_points(Rng& rng, std::size_t n, std::size_t count);
ProjPoint random_point(Rng& rng, std::size_t n, long bound = 50);

}  // namespace starconf
