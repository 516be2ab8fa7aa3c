#pragma once

// Sparse homogeneous polynomials over Q with a deterministic (graded-lex)
// term order, plus the resultant machinery used for coprimality and
// concurrency certificates.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "starconf/matrix.hpp"
#include "starconf/rational.hpp"

namespace starconf {

using Exponent = std::vector<unsigned>;

/// All exponent vectors of total degree `degree` in `num_vars` variables,
/// largest first in lex order (x0^d, x0^(d-1) x1, ...). This order indexes
/// coefficient vectors and the columns of evaluation matrices.
std::vector<Exponent> monomial_basis(std::size_t num_vars, unsigned degree);

class HomForm {
 public:
  using Terms = std::map<Exponent, Rational, std::greater<>>;

  HomForm(std::size_t num_vars, unsigned degree);

  static HomForm variable(std::size_t num_vars, std::size_t index);
  static HomForm constant(std::size_t num_vars, const Rational& value);
  static HomForm linear(std::span<const Integer> coeffs);
  /// Coefficients listed in monomial_basis order.
  static HomForm from_coefficients(std::size_t num_vars, unsigned degree,
                                   std::span<const Integer> coeffs);
  static HomForm from_coefficients(std::size_t num_vars, unsigned degree,
                                   std::span<const Rational> coeffs);

  std::size_t num_vars() const { return num_vars_; }
  unsigned degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  /// Adds `c` to the coefficient of `e`, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);
  std::vector<Rational> coefficient_vector() const;

  Rational eval(std::span<const Rational> point) const;
  Rational eval(std::span<const Integer> point) const;

  HomForm partial(std::size_t var) const;
  std::vector<Rational> gradient(std::span<const Integer> point) const;

  /// Linear substitution x_i -> sum_j a(i, j) y_j; `a` has num_vars rows and
  /// one column per new variable.
  HomForm substitute(const RatMatrix& a) const;

  HomForm operator-() const;
  HomForm& operator+=(const HomForm& other);
  HomForm& operator-=(const HomForm& other);
  HomForm& operator*=(const Rational& c);
  friend HomForm operator+(HomForm a, const HomForm& b) { return a += b; }
  friend HomForm operator-(HomForm a, const HomForm& b) { return a -= b; }
  friend HomForm operator*(HomForm a, const Rational& c) { return a *= c; }
  friend HomForm operator*(const Rational& c, HomForm a) { return a *= c; }
  friend HomForm operator*(const HomForm& a, const HomForm& b);
  HomForm pow(unsigned k) const;

  bool operator==(const HomForm& other) const = default;

  /// Primitive integer coefficients with positive leading term.
  HomForm normalized() const;

  /// Human-readable form, e.g. "x^2 - 4*x*y + z^2".
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  unsigned degree_;
  Terms terms_;
};

bool proportional(const HomForm& a, const HomForm& b);

/// Determinant of the Sylvester matrix of F and G as polynomials in x_var of
/// formal degrees deg F and deg G. The result is a form of degree
/// deg F * deg G in the remaining variables (renumbered in order).
/// Throws DegenerateConfiguration when both x_var^deg coefficients vanish.
HomForm sylvester_resultant(const HomForm& f, const HomForm& g, std::size_t var);

/// Random invertible integer matrix with entries in [-bound, bound].
template <class Rng>
RatMatrix random_invertible(Rng& rng, std::size_t n, int bound);

/// True iff F and G share no factor of positive degree. Decided by the
/// resultant after a random linear change of coordinates that makes both
/// leading coefficients generic; at most three changes are tried.
bool coprime(const HomForm& f, const HomForm& g);

}  // namespace starconf

#include "starconf/linalg.hpp"

namespace starconf {

template <class Rng>
RatMatrix random_invertible(Rng& rng, std::size_t n, int bound) {
  for (;;) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(rng.uniform(-bound, bound));
    if (determinant(a) != 0) return a;
  }
}

}  // namespace starconf
