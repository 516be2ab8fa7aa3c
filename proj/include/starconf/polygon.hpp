#pragma once

// Incidence checks for polygons circumscribed to a conic. Irrational
// intersection points are never computed; every claim reduces to a
// proportionality, rank, or resultant condition over Q.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "starconf/form.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

/// Restricts both conics to the line A4 A8 and compares the two binary
/// quadratics up to scale. Throws DegenerateConfiguration if an excluded
/// point lies on that line.
bool residual_collinearity_check(const HomForm& g1, const HomForm& g2, const ProjPoint& a4, const ProjPoint& a8,
                                 std::span<const ProjPoint> excluded);

struct PencilResult {
  bool verdict = false;
  std::size_t rank = 0;
  /// A member of both pencils, when the verdict is true.
  std::optional<HomForm> common;
};

PencilResult pencil_intersection_check(const HomForm& g1, const HomForm& g3, const HomForm& g2, const HomForm& g4);

struct ConcurrencyResult {
  bool verdict = false;
  std::vector<bool> sub_verdicts;
};

/// Randomized test that three conics share a point: for each of three random
/// coordinate changes, the resultants of (g12, g13) and (g12, g23) in the last
/// variable must have a common factor. The verdict is the majority.
ConcurrencyResult three_conics_concurrent(const HomForm& g12, const HomForm& g13, const HomForm& g23,
                                          std::uint64_t seed = 0x5eed);

/// Vertices T_i cap T_(i+1) of the polygon circumscribed to y^2 - xz with
/// tangency parameters `params` (indices cyclic).
std::vector<ProjPoint> circumscribed_polygon(std::span<const Param> params);

/// Whether the diagonals V1V4, V2V5, V3V6 of a hexagon are concurrent.
bool hexagon_diagonals_concurrent(std::span<const ProjPoint> v);

bool brianchon_check(std::span<const Param> params);

/// The conics of the octagon statements, built from vertices A1..A8
/// (passed 0-based). Line l_ij joins A_i and A_j.
struct OctagonConics {
  HomForm g1, g2, g3, g4;
};
OctagonConics octagon_conics(std::span<const ProjPoint> a);

/// A4, A8 and the residual points of g1 cap g2 are collinear.
bool octagon_residual_collinearity(std::span<const ProjPoint> a);
PencilResult octagon_pencil_check(std::span<const ProjPoint> a);

}  // namespace starconf
