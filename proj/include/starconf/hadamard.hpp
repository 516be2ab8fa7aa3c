#pragma once

// Coordinate-wise (Hadamard) products of points and linear spaces, and the
// genericity loci Delta_i of points with at most i+1 nonzero coordinates.

#include <span>
#include <vector>

#include "starconf/form.hpp"
#include "starconf/projective.hpp"

namespace starconf {

class RNC;

ProjPoint had_point(const ProjPoint& p, const ProjPoint& q);
ProjPoint had_product(std::span<const ProjPoint> ps);
ProjPoint had_power(const ProjPoint& p, unsigned k);

/// Products over all r-subsets of distinct points; duplicates collapse.
PointSet sqfree_had_power(const PointSet& x, unsigned r);

bool delta_membership(const ProjPoint& p, unsigned i);

/// The line through base points P and Q, read as the binary linear forms
/// L_i(a, b) = a P_i + b Q_i.
class LineParam {
 public:
  LineParam(ProjPoint p, ProjPoint q);
  /// The line through two points of the plane cut out by `h`.
  static LineParam from_plane_line(const Hyperplane& h);

  std::size_t ambient_dim() const { return p_.dim(); }
  const ProjPoint& p() const { return p_; }
  const ProjPoint& q() const { return q_; }
  ProjPoint point_at(const Integer& a, const Integer& b) const;
  /// Parameter [a:b] of a point on the line; throws when the point is off it.
  std::pair<Integer, Integer> param_of(const ProjPoint& x) const;
  bool contains(const ProjPoint& x) const;
  /// The point of the line with x_0 = 1 and x_1 = v.
  ProjPoint chart_point(const Rational& v) const;

 private:
  ProjPoint p_;
  ProjPoint q_;
};

/// True iff the line misses Delta_i, i.e. no n-i of the forms L_j share a root.
bool line_avoids_delta(const LineParam& line, unsigned i);

struct CoordinatePower {
  /// Row i holds the coefficients of L_i^k in the basis a^k, a^(k-1) b, ..., b^k.
  RatMatrix forms;
  bool is_rnc = false;
};

CoordinatePower coordinate_power_line(const LineParam& line, unsigned k);

/// The curve line^(o n) as a rational normal curve (throws if it is not one).
RNC coordinate_power_rnc(const LineParam& line);

/// P * H: the hyperplane with coefficients h_i / p_i. Needs all p_i nonzero.
Hyperplane had_point_hyperplane(const ProjPoint& p, const Hyperplane& h);

/// The hyperplane line^(* (n-1)) spanned by P^(n-1-i) * Q^i, i = 0..n-1.
Hyperplane had_power_hyperplane(const LineParam& line);

/// Spanning points P^(n-i) * Q^i, i = 0..d, of the d-dimensional flat
/// osculating line^(o n) at P^(* n), with Q the second base point of the line
/// (or the first one when P coincides with it).
std::vector<ProjPoint> osculating_flat_hadamard(const ProjPoint& p, const LineParam& line, unsigned d);

/// Implicit equation of line^(o 2) for a line of the plane, normalized to
/// alpha x + beta y - z = 0: (alpha^2 x + beta^2 y - z)^2 - 4 alpha^2 beta^2 x y.
HomForm implicit_square_conic(const Hyperplane& line);

}  // namespace starconf
