#include "starconf/hadamard.hpp"

#include "starconf/linalg.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

ProjPoint had_point(const ProjPoint& p, const ProjPoint& q) {
  if (p.size() != q.size()) throw Error("Hadamard product of points in different spaces");
  std::vector<Integer> c(p.size());
  bool defined = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    c[i] = p[i] * q[i];
    defined = defined || c[i] != 0;
  }
  if (!defined) throw Error("Hadamard product undefined: no common nonzero coordinate");
  return ProjPoint(std::span<const Integer>(c));
}

ProjPoint had_product(std::span<const ProjPoint> ps) {
  if (ps.empty()) throw Error("empty Hadamard product");
  std::vector<Integer> c = ps.front().coords();
  for (std::size_t k = 1; k < ps.size(); ++k) {
    if (ps[k].size() != c.size()) throw Error("Hadamard product of points in different spaces");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= ps[k][i];
  }
  for (const auto& v : c)
    if (v != 0) return ProjPoint(std::span<const Integer>(c));
  throw Error("Hadamard product undefined: no common nonzero coordinate");
}

ProjPoint had_power(const ProjPoint& p, unsigned k) {
  if (k == 0) {
    std::vector<Integer> ones(p.size(), 1);
    return ProjPoint(std::span<const Integer>(ones));
  }
  std::vector<ProjPoint> copies(k, p);
  return had_product(copies);
}

PointSet sqfree_had_power(const PointSet& x, unsigned r) {
  PointSet out(x.ambient_dim());
  for (const auto& idx : combinations(x.size(), r)) {
    std::vector<ProjPoint> sub;
    for (auto i : idx) sub.push_back(x.points()[i]);
    out.insert(had_product(sub));
  }
  return out;
}

bool delta_membership(const ProjPoint& p, unsigned i) {
  std::size_t nonzero = 0;
  for (const auto& c : p.coords()) nonzero += c != 0 ? 1 : 0;
  return nonzero <= static_cast<std::size_t>(i) + 1;
}

LineParam::LineParam(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size()) throw Error("line base points live in different spaces");
  if (p_ == q_) throw Error("line base points must be distinct");
}

LineParam LineParam::from_plane_line(const Hyperplane& h) {
  if (h.dim() != 2) throw Error("from_plane_line expects a line of the plane");
  IntMatrix m;
  m.append_row(h.coords());
  const auto ker = kernel_basis(m);
  return LineParam(ProjPoint(std::span<const Integer>(ker[0])), ProjPoint(std::span<const Integer>(ker[1])));
}

ProjPoint LineParam::point_at(const Integer& a, const Integer& b) const {
  std::vector<Integer> c(p_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a * p_[i] + b * q_[i];
  return ProjPoint(std::span<const Integer>(c));
}

std::pair<Integer, Integer> LineParam::param_of(const ProjPoint& x) const {
  // x = a P + b Q: kernel of the 3-row system [P; Q; x]^T.
  IntMatrix m(p_.size(), 3);
  for (std::size_t i = 0; i < p_.size(); ++i) {
    m(i, 0) = p_[i];
    m(i, 1) = q_[i];
    m(i, 2) = x[i];
  }
  const auto ker = kernel_basis(m);
  if (ker.size() != 1 || ker[0][2] == 0) throw Error("point is not on the line");
  // a P + b Q - c x = 0 with c = -ker[2].
  Integer a = ker[0][0], b = ker[0][1], c = -ker[0][2];
  if (c < 0) {
    a = -a;
    b = -b;
  }
  const Integer coords[] = {a, b};
  const auto prim = primitive_integer_vector(std::span<const Integer>(coords));
  return {prim[0], prim[1]};
}

bool LineParam::contains(const ProjPoint& x) const {
  const ProjPoint ps[] = {p_, q_, x};
  return span_rank(std::span<const ProjPoint>(ps)) == 2;
}

ProjPoint LineParam::chart_point(const Rational& v) const {
  RatMatrix a(2, 2);
  a(0, 0) = p_[0];
  a(0, 1) = q_[0];
  a(1, 0) = p_[1];
  a(1, 1) = q_[1];
  if (determinant(a) == 0) throw Error("line is not a graph over the first two coordinates");
  const Rational rhs[] = {1, v};
  const auto ab = solve(a, rhs);
  std::vector<Rational> c(p_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ab[0] * p_[i] + ab[1] * q_[i];
  return ProjPoint(std::span<const Rational>(c));
}

bool line_avoids_delta(const LineParam& line, unsigned i) {
  const std::size_t n = line.ambient_dim();
  if (i > n) throw Error("Delta index out of range");
  if (i == n) return false;  // Delta_n is all of P^n
  // A point of the line lies in Delta_i iff at least n - i of its coordinates
  // vanish, i.e. n - i of the binary forms share a root. For the forms
  // L_j = (p_j, q_j) this happens iff those coefficient vectors span a
  // space of dimension <= 1.
  const std::size_t k = n - i;
  for (const auto& idx : combinations(n + 1, k)) {
    IntMatrix m;
    for (auto j : idx) {
      const Integer row[] = {line.p()[j], line.q()[j]};
      m.append_row(row);
    }
    if (rank(m) <= 1) return false;
  }
  return true;
}

CoordinatePower coordinate_power_line(const LineParam& line, unsigned k) {
  const std::size_t n = line.ambient_dim();
  CoordinatePower out;
  out.forms = RatMatrix(n + 1, k + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (unsigned j = 0; j <= k; ++j) {
      Integer pi, qj;
      mpz_pow_ui(pi.get_mpz_t(), line.p()[i].get_mpz_t(), k - j);
      mpz_pow_ui(qj.get_mpz_t(), line.q()[i].get_mpz_t(), j);
      out.forms(i, j) = Rational(binomial(k, j) * pi * qj);
    }
  }
  out.is_rnc = k == n && determinant(out.forms) != 0;
  return out;
}

RNC coordinate_power_rnc(const LineParam& line) {
  auto power = coordinate_power_line(line, static_cast<unsigned>(line.ambient_dim()));
  if (!power.is_rnc) throw DegenerateConfiguration("coordinate-wise power of the line is not a rational normal curve");
  return RNC(std::move(power.forms));
}

Hyperplane had_point_hyperplane(const ProjPoint& p, const Hyperplane& h) {
  if (p.size() != h.size()) throw Error("point and hyperplane live in different spaces");
  std::vector<Rational> c(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) throw Error("product not a hyperplane: point has a zero coordinate");
    c[i] = make_rational(h[i], p[i]);
  }
  return Hyperplane(std::span<const Rational>(c));
}

Hyperplane had_power_hyperplane(const LineParam& line) {
  const unsigned n = static_cast<unsigned>(line.ambient_dim());
  std::vector<ProjPoint> span;
  for (unsigned i = 0; i < n; ++i) {
    const ProjPoint parts[] = {had_power(line.p(), n - 1 - i), had_power(line.q(), i)};
    span.push_back(had_product(parts));
  }
  return join_points(span);
}

std::vector<ProjPoint> osculating_flat_hadamard(const ProjPoint& p, const LineParam& line, unsigned d) {
  const unsigned n = static_cast<unsigned>(line.ambient_dim());
  if (d > n) throw Error("flat dimension exceeds ambient dimension");
  if (!line.contains(p)) throw Error("point is not on the line");
  const ProjPoint& q = p == line.q() ? line.p() : line.q();
  std::vector<ProjPoint> out;
  for (unsigned i = 0; i <= d; ++i) {
    const ProjPoint parts[] = {had_power(p, n - i), had_power(q, i)};
    out.push_back(had_product(parts));
  }
  return out;
}

HomForm implicit_square_conic(const Hyperplane& line) {
  if (line.dim() != 2) throw Error("implicit_square_conic expects a line of the plane");
  // The slot with a nonzero coefficient plays the role of z.
  std::size_t iz = 2;
  if (line[2] == 0) iz = line[1] != 0 ? 1 : 0;
  std::size_t ix = iz == 0 ? 1 : 0;
  std::size_t iy = 3 - ix - iz;
  const Rational alpha = make_rational(-line[ix], line[iz]);
  const Rational beta = make_rational(-line[iy], line[iz]);
  const HomForm x = HomForm::variable(3, ix);
  const HomForm y = HomForm::variable(3, iy);
  const HomForm z = HomForm::variable(3, iz);
  const HomForm inner = alpha * alpha * x + beta * beta * y - z;
  const HomForm conic = inner * inner - Rational(4) * alpha * alpha * beta * beta * (x * y);
  return conic.normalized();
}

}  // namespace starconf
