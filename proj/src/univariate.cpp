#include "starconf/univariate.hpp"

#include <algorithm>

namespace starconf {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& v : c) v /= lead;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::remainder(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = coeffs_;
  const int dd = divisor.degree();
  const Rational lead = divisor.leading();
  while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
    const Rational q = r.back() / lead;
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
    for (int i = 0; i <= dd; ++i) r[shift + static_cast<std::size_t>(i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.remainder(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Dehomogenizes at y = 1 and reports the multiplicity of the root [1:0].
UniPoly dehomogenize(const HomForm& f, unsigned& root_at_infinity) {
  const unsigned d = f.degree();
  std::vector<Rational> c(d + 1);
  for (const auto& [e, v] : f.terms()) c[e[0]] = v;
  root_at_infinity = 0;
  for (unsigned k = d + 1; k-- > 0;) {
    if (c[k] != 0) break;
    ++root_at_infinity;
  }
  return UniPoly(std::move(c));
}

}  // namespace

unsigned binary_gcd_degree(const HomForm& a, const HomForm& b) {
  if (a.num_vars() != 2 || b.num_vars() != 2) throw Error("binary_gcd_degree expects binary forms");
  if (a.is_zero() || b.is_zero()) throw Error("binary_gcd_degree of a zero form");
  unsigned inf_a = 0, inf_b = 0;
  const UniPoly pa = dehomogenize(a, inf_a);
  const UniPoly pb = dehomogenize(b, inf_b);
  return std::min(inf_a, inf_b) + static_cast<unsigned>(gcd(pa, pb).degree());
}

}  // namespace starconf
