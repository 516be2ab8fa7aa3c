#pragma once

// Exploration campaigns for the two open conjectures: unions of contact
// stars on a conic versus general fat points (conj4.7), and unions of two
// contact stars in P^n (conj6.1).

#include <optional>
#include <string>
#include <vector>

#include "starconf/json_io.hpp"
#include "starconf/suites.hpp"

namespace starconf {

struct CampaignConfig {
  std::string conjecture;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::optional<Range> n;
  /// Star sizes (conj4.7) or the size of the first star (conj6.1).
  std::optional<Range> r;
  /// Number of stars (conj4.7) or the size of the second star (conj6.1).
  std::optional<Range> s;
  /// Fixed star sizes for conj4.7, overriding r and s.
  std::vector<unsigned> sizes;
};

/// Throws Error for an unknown conjecture id or invalid ranges.
Json run_campaign(const CampaignConfig& config);

/// (1, C(n, n-1), ..., C(r-1, n-1), C(s-1, n-1), ..., C(n, n-1), 1).
HVector conjectured_two_star_hvector(unsigned n, unsigned r, unsigned s);

}  // namespace starconf
