#pragma once

// Exact linear algebra over Q by fraction-free (Bareiss) elimination on
// integer matrices. Row updates below each pivot run as an OpenMP parallel
// loop once the trailing block is large enough; the serial rational
// Gauss-Jordan in namespace `reference` is kept as a test oracle and for
// benchmarking.

#include <cstddef>
#include <vector>

#include "starconf/matrix.hpp"

namespace starconf {

/// Fraction-free row echelon form. Rows [0, rank) are the pivot rows; the
/// remaining rows are zero. `pivots[k]` is the pivot column of row k.
struct Echelon {
  IntMatrix form;
  std::vector<std::size_t> pivots;
  int sign = 1;  // parity of the row swaps performed
  std::size_t rank() const { return pivots.size(); }
};

Echelon bareiss_echelon(IntMatrix m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space. Each vector is primitive with a positive
/// leading entry; one vector per non-pivot column, in column order.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Unique solution of a square nonsingular system; throws when singular.
std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b);

namespace reference {

std::size_t rank(const RatMatrix& m);
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m);
Rational determinant(const RatMatrix& m);

}  // namespace reference

}  // namespace starconf
