#pragma once

// Complete-intersection certificates, non-CI refutations, the
// Cayley-Bacharach/Gorenstein test, and conic fitting/duality helpers.

#include <cstdint>
#include <optional>
#include <span>

#include "starconf/form.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/projective.hpp"

namespace starconf {

/// Bezout certificate: F and G of degrees a and b vanish on X, share no
/// component, and |X| = a b, so X = V(F, G).
struct CICertificate {
  CIType type;
  HomForm F;
  HomForm G;
  bool verified = false;
};

/// Throws Error("no curve of degree a") when the degree-a slice is empty and
/// Error("certificate not found") when the search gives up.
CICertificate ci_certificate(const PointSet& x, CIType ct);

bool verify_certificate(const PointSet& x, const CICertificate& cert);

/// True iff X is provably not a complete intersection of type ct.
bool ci_refutation(const PointSet& x, CIType ct);

/// Symmetric h-vector plus the Cayley-Bacharach property: removing any point
/// lowers only the last entry of the h-vector.
bool cb_gorenstein(const PointSet& x);

std::optional<HomForm> points_on_common_conic(const PointSet& ps);

/// Symmetric 3x3 matrix of a plane conic.
RatMatrix conic_matrix(const HomForm& conic);
HomForm conic_from_matrix(const RatMatrix& m);
RatMatrix adjugate3(const RatMatrix& m);

/// l^T adj(M) l = 0: the line is tangent to the (smooth) conic.
bool line_tangent_to_conic(const Hyperplane& line, const HomForm& conic);

/// The smooth conic tangent to all six lines, if there is one.
std::optional<HomForm> common_tangent_conic(std::span<const Hyperplane> lines);

}  // namespace starconf
