#include "starconf/linalg.hpp"

#include <omp.h>

namespace starconf {

namespace {

// Below this many entry updates per pivot step the loop stays serial.
constexpr std::size_t kParallelWork = 4096;

std::size_t pick_pivot(const IntMatrix& m, std::size_t from, std::size_t col) {
  std::size_t best = m.rows();
  std::size_t best_size = 0;
  for (std::size_t i = from; i < m.rows(); ++i) {
    const auto& v = m(i, col);
    if (v == 0) continue;
    const std::size_t size = mpz_size(v.get_mpz_t());
    if (best == m.rows() || size < best_size) {
      best = i;
      best_size = size;
    }
  }
  return best;
}

}  // namespace

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& v : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<Rational> multiply(const RatMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw Error("dimension mismatch in matrix-vector product");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Echelon bareiss_echelon(IntMatrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t p = pick_pivot(m, r, c);
    if (p == rows) continue;
    if (p != r) {
      m.swap_rows(p, r);
      e.sign = -e.sign;
    }
    const Integer pivot = m(r, c);
    const auto below = static_cast<std::ptrdiff_t>(rows - r - 1);
    const bool wide = static_cast<std::size_t>(below) * (cols - c) >= kParallelWork;
    // Each entry becomes a (k+1)-minor of the input, so the division by the
    // previous pivot is exact.
#pragma omp parallel for schedule(static) if (wide)
    for (std::ptrdiff_t off = 1; off <= below; ++off) {
      const std::size_t i = r + static_cast<std::size_t>(off);
      Integer lead = m(i, c);
      Integer t;
      for (std::size_t j = c + 1; j < cols; ++j) {
        auto& a = m(i, j);
        if (lead == 0) {
          if (a == 0) continue;
          a *= pivot;
        } else {
          t = lead * m(r, j);
          a *= pivot;
          a -= t;
        }
        mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  e.form = std::move(m);
  return e;
}

std::size_t rank(const IntMatrix& m) { return bareiss_echelon(m).rank(); }

std::size_t rank(const RatMatrix& m) { return rank(clear_denominators(m)); }

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Integer> x(cols, 0);
    x[f] = 1;
    Integer s, g, scale;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t p = e.pivots[k];
      s = 0;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (x[j] != 0 && e.form(k, j) != 0) s += e.form(k, j) * x[j];
      if (s == 0) continue;
      const Integer& u = e.form(k, p);
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), s.get_mpz_t());
      mpz_divexact(scale.get_mpz_t(), u.get_mpz_t(), g.get_mpz_t());
      if (scale != 1)
        for (auto& v : x) v *= scale;
      mpz_divexact(x[p].get_mpz_t(), s.get_mpz_t(), g.get_mpz_t());
      x[p] = -x[p];
    }
    basis.push_back(primitive_integer_vector(std::span<const Integer>(x)));
  }
  return basis;
}

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& m) {
  return kernel_basis(clear_denominators(m));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  const Echelon e = bareiss_echelon(m);
  if (e.rank() < m.rows()) return 0;
  const std::size_t n = m.rows() - 1;
  return e.sign > 0 ? Integer(e.form(n, n)) : Integer(-e.form(n, n));
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  Integer scale = 1;
  IntMatrix im(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (const auto& v : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) im(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return make_rational(determinant(im), scale);
}

std::vector<Rational> solve(const RatMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve: dimension mismatch");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto ker = kernel_basis(aug);
  if (ker.size() != 1 || ker.front()[n] == 0) throw Error("solve: singular system");
  const auto& v = ker.front();
  std::vector<Rational> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = make_rational(-v[j], v[n]);
  return x;
}

}  // namespace starconf
