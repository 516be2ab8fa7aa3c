#pragma once

// Hilbert functions and h-vectors of fat-point schemes, computed as ranks of
// derivative-condition matrices, plus closed forms they are checked against.

#include <cstdint>
#include <string>
#include <vector>

#include "starconf/form.hpp"
#include "starconf/projective.hpp"

namespace starconf {

struct HVector {
  std::vector<std::uint64_t> h;

  HVector() = default;
  HVector(std::initializer_list<std::uint64_t> values) : HVector(std::vector<std::uint64_t>(values)) {}
  explicit HVector(std::vector<std::uint64_t> values);

  std::uint64_t degree() const;
  bool empty() const { return h.empty(); }
  std::size_t size() const { return h.size(); }
  std::uint64_t operator[](std::size_t i) const { return i < h.size() ? h[i] : 0; }
  bool symmetric() const;
  /// "(1,2,3)".
  std::string to_string() const;
  bool operator==(const HVector&) const = default;
};

struct CIType {
  unsigned a = 1;
  unsigned b = 1;
  CIType() = default;
  /// Sorted so that a <= b.
  CIType(unsigned x, unsigned y);
  bool operator==(const CIType&) const = default;
};

/// One row per point P and multi-index alpha with |alpha| = min(m_P - 1, d):
/// the values of d^alpha(monomial) at P over the degree-d monomials.
IntMatrix conditions_matrix(const FatScheme& z, unsigned d);

std::uint64_t hilbert_function(const FatScheme& z, unsigned d);

struct HilbertTable {
  /// H(0), H(1), ..., up to and including the first degree where H = deg Z.
  std::vector<std::uint64_t> values;
  HVector h;
};

HilbertTable hilbert_table(const FatScheme& z);
HVector h_vector(const FatScheme& z);
inline HVector h_vector(const PointSet& x) { return h_vector(FatScheme::reduced(x)); }

/// Basis of (I_Z)_d as forms, one per kernel vector of the conditions matrix.
std::vector<HomForm> ideal_slice(const FatScheme& z, unsigned d);
inline std::vector<HomForm> ideal_slice(const PointSet& x, unsigned d) {
  return ideal_slice(FatScheme::reduced(x), d);
}

/// True iff the two lists of forms of one degree span the same space.
bool same_span(const std::vector<HomForm>& a, const std::vector<HomForm>& b);

HVector generic_star_hvector(unsigned r, unsigned n);
/// (1, 2, ..., m, n, n-1, ..., 1) for m >= n >= 0 (arguments are sorted).
HVector two_fat_hvector(unsigned m, unsigned n);
HVector star_difference_hvector(unsigned s, unsigned t);
HVector ci_hvector(CIType ct);
/// h-vector of the residual of X in a complete intersection of type ct.
HVector liaison_linked_hvector(CIType ct, const HVector& h_x);
/// Hilbert function of three general fat points in the plane.
std::uint64_t three_fat_hilbert(std::vector<unsigned> mults, unsigned d);
HVector three_fat_hvector(std::vector<unsigned> mults);
/// h-vector of three general fat points of multiplicities t-1, r-1, s-1 for
/// r >= s >= 2 and t in {r+s-1, r+s, r+s+1}.
HVector three_fat_3had_hvector(unsigned r, unsigned s, unsigned t);

}  // namespace starconf
