#include "starconf/certificates.hpp"

#include "starconf/linalg.hpp"
#include "starconf/random.hpp"
#include "starconf/rnc.hpp"

namespace starconf {

namespace {

bool vanishes_on(const HomForm& f, const PointSet& x) {
  for (const auto& p : x)
    if (f.eval(p.coords()) != 0) return false;
  return true;
}

HomForm combination(Rng& rng, const std::vector<HomForm>& basis) {
  HomForm out(basis.front().num_vars(), basis.front().degree());
  for (const auto& f : basis) out += Rational(static_cast<long>(rng.uniform(-5, 5))) * f;
  return out;
}

}  // namespace

bool verify_certificate(const PointSet& x, const CICertificate& cert) {
  if (x.ambient_dim() != 2) return false;
  if (x.size() != static_cast<std::size_t>(cert.type.a) * cert.type.b) return false;
  if (cert.F.degree() != cert.type.a || cert.G.degree() != cert.type.b) return false;
  if (cert.F.is_zero() || cert.G.is_zero()) return false;
  return vanishes_on(cert.F, x) && vanishes_on(cert.G, x) && coprime(cert.F, cert.G);
}

CICertificate ci_certificate(const PointSet& x, CIType ct) {
  if (x.ambient_dim() != 2) throw Error("complete intersection certificates are for plane point sets");
  if (x.size() != static_cast<std::size_t>(ct.a) * ct.b)
    throw Error("point count differs from a*b for the requested type");
  const auto fa = ideal_slice(x, ct.a);
  if (fa.empty()) throw Error("no curve of degree " + std::to_string(ct.a));
  const auto fb = ct.a == ct.b ? fa : ideal_slice(x, ct.b);
  if (fb.empty()) throw Error("no curve of degree " + std::to_string(ct.b));
  // A single curve of degree a = b cannot be paired with a coprime partner.
  if (ct.a == ct.b && fa.size() < 2) throw Error("certificate not found");

  auto accept = [&](const HomForm& f, const HomForm& g) -> std::optional<CICertificate> {
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    CICertificate cert{ct, f.normalized(), g.normalized(), false};
    if (!coprime(cert.F, cert.G)) return std::nullopt;
    cert.verified = verify_certificate(x, cert);
    if (!cert.verified) throw InternalError("certificate failed re-verification");
    return cert;
  };

  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = ct.a == ct.b ? i + 1 : 0; j < fb.size(); ++j)
      if (auto cert = accept(fa[i], fb[j])) return *cert;
  Rng rng(0xc1ce27);
  for (int attempt = 0; attempt < 50; ++attempt)
    if (auto cert = accept(combination(rng, fa), combination(rng, fb))) return *cert;
  throw Error("certificate not found");
}

bool ci_refutation(const PointSet& x, CIType ct) {
  if (x.size() != static_cast<std::size_t>(ct.a) * ct.b) return true;
  return h_vector(x) != ci_hvector(ct);
}

bool cb_gorenstein(const PointSet& x) {
  if (x.size() < 2) throw Error("cb_gorenstein needs at least two points");
  const HVector h = h_vector(x);
  if (!h.symmetric()) return false;
  std::vector<std::uint64_t> expected = h.h;
  expected.back() -= 1;
  const HVector target(std::move(expected));
  for (const auto& p : x)
    if (h_vector(x.without(p)) != target) return false;
  return true;
}

std::optional<HomForm> points_on_common_conic(const PointSet& ps) {
  if (ps.ambient_dim() != 2) throw Error("expected points of the plane");
  const auto ker = kernel_basis(evaluation_matrix(ps.points(), 2));
  if (ker.empty()) return std::nullopt;
  return HomForm::from_coefficients(3, 2, std::span<const Integer>(ker[0]));
}

RatMatrix conic_matrix(const HomForm& conic) {
  if (conic.num_vars() != 3 || conic.degree() != 2) throw Error("expected a plane conic");
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Exponent e(3, 0);
      e[i] += 1;
      e[j] += 1;
      const Rational c = conic.coefficient(e);
      if (i == j) {
        m(i, i) = c;
      } else {
        m(i, j) = c / 2;
        m(j, i) = c / 2;
      }
    }
  return m;
}

HomForm conic_from_matrix(const RatMatrix& m) {
  HomForm out(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      Exponent e(3, 0);
      e[i] += 1;
      e[j] += 1;
      out.add_term(e, i == j ? m(i, i) : m(i, j) + m(j, i));
    }
  return out;
}

RatMatrix adjugate3(const RatMatrix& m) {
  RatMatrix adj(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return adj;
}

bool line_tangent_to_conic(const Hyperplane& line, const HomForm& conic) {
  const RatMatrix adj = adjugate3(conic_matrix(conic));
  Rational value;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) value += line[i] * adj(i, j) * line[j];
  return value == 0;
}

std::optional<HomForm> common_tangent_conic(std::span<const Hyperplane> lines) {
  if (lines.size() != 6) throw Error("common_tangent_conic needs six lines");
  std::vector<ProjPoint> duals;
  for (const auto& l : lines) duals.push_back(dual_point(l));
  const auto ker = kernel_basis(evaluation_matrix(duals, 2));
  if (ker.size() != 1) return std::nullopt;
  const HomForm dual_conic = HomForm::from_coefficients(3, 2, std::span<const Integer>(ker[0]));
  const RatMatrix m = conic_matrix(dual_conic);
  if (determinant(m) == 0) return std::nullopt;
  return conic_from_matrix(adjugate3(m)).normalized();
}

}  // namespace starconf
