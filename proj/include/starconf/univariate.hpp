#pragma once

#include <vector>

#include "starconf/form.hpp"

namespace starconf {

/// Dense univariate polynomial over Q, coefficients from the constant term up.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational eval(const Rational& x) const;

  UniPoly monic() const;
  UniPoly remainder(const UniPoly& divisor) const;

  bool operator==(const UniPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly gcd(UniPoly a, UniPoly b);

/// Degree of gcd of two binary forms (HomForms in 2 variables), counting the
/// common root [1:0] as well. Both forms must be nonzero.
unsigned binary_gcd_degree(const HomForm& a, const HomForm& b);

}  // namespace starconf
