// Serial Gauss-Jordan over Q. Slow on large inputs; kept as an independent
// oracle for the fraction-free kernel and as the benchmark baseline.

#include "starconf/linalg.hpp"

namespace starconf::reference {

namespace {

struct Reduced {
  RatMatrix form;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

Reduced gauss_jordan(RatMatrix m) {
  Reduced out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.swap_rows(p, r);
      out.sign = -out.sign;
    }
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.form = std::move(m);
  return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return gauss_jordan(m).pivots.size(); }

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m) {
  const Reduced red = gauss_jordan(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols(), 0);
    x[f] = 1;
    for (std::size_t k = 0; k < red.pivots.size(); ++k) x[red.pivots[k]] = -red.form(k, f);
    basis.push_back(primitive_integer_vector(std::span<const Rational>(x)));
  }
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t p = c;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace starconf::reference
