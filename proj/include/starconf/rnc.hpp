#pragma once

// Rational normal curves, their osculating flats, contact star
// configurations, and tangent/conic utilities for the plane.

#include <span>
#include <vector>

#include "starconf/form.hpp"
#include "starconf/projective.hpp"
#include "starconf/random.hpp"

namespace starconf {

struct ParamTag {};
/// A point [a:b] of the parameter line.
using Param = ProjVector<ParamTag>;

/// [1:t] for a rational t, i.e. [q:p] when t = p/q.
Param param_from(const Rational& t);
/// "t", "p/q", "a:b" or "inf".
Param parse_param(std::string_view text);

class RNC {
 public:
  /// `forms` is (n+1) x (n+1): row i holds the coefficients of the i-th
  /// coordinate form in the basis s^n, s^(n-1) t, ..., t^n. Throws unless the
  /// matrix is nonsingular.
  explicit RNC(RatMatrix forms);

  /// [s^n : s^(n-1) t : ... : t^n].
  static RNC standard(unsigned n);

  unsigned n() const { return static_cast<unsigned>(forms_.rows() - 1); }
  const RatMatrix& forms() const { return forms_; }

  /// Coefficients of h(gamma(s, t)) in the basis s^n, ..., t^n.
  std::vector<Rational> pullback(const Hyperplane& h) const;

 private:
  RatMatrix forms_;
};

ProjPoint rnc_point(const RNC& curve, const Param& t);

/// Spanning points of the d-dimensional osculating flat at t: the order-d
/// partial derivatives of the parametrization. By the Euler identity they
/// also span all lower-order derivatives.
std::vector<ProjPoint> osculating_flat(const RNC& curve, const Param& t, unsigned d);

/// The osculating hyperplane at t. Its pullback is checked to be a multiple
/// of (b s - a t)^n.
Hyperplane osculating_hyperplane(const RNC& curve, const Param& t);

bool has_full_contact(const RNC& curve, const Param& t, const Hyperplane& h);

struct ContactStar {
  RNC curve;
  std::vector<Param> params;
  std::vector<Hyperplane> hyperplanes;
  PointSet points;
};

ContactStar contact_star(const RNC& curve, std::vector<Param> params);

/// Distinct random parameters [a:b] with a, b in [-bound, bound], skipping
/// anything in `avoid`.
std::vector<Param> random_params(Rng& rng, std::size_t count, long bound = 20,
                                 std::span<const Param> avoid = {});

/// y^2 - x z, the image of the standard conic parametrization.
HomForm standard_conic();

Hyperplane tangent_line_conic(const HomForm& conic, const ProjPoint& p);

/// The unique conic through five points; throws when it is not unique.
HomForm conic_through_five(std::span<const ProjPoint> ps);

/// Evaluation matrix of the degree-d monomials at the points.
IntMatrix evaluation_matrix(std::span<const ProjPoint> ps, unsigned degree);

}  // namespace starconf
