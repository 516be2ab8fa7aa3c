#include "starconf/rnc.hpp"

#include <algorithm>
#include <string>

#include "starconf/linalg.hpp"

namespace starconf {

namespace {

Integer falling(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= n - i;
  return out;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

Param param_from(const Rational& t) {
  const Integer c[] = {t.get_den(), t.get_num()};
  return Param(std::span<const Integer>(c));
}

Param parse_param(std::string_view text) {
  if (text == "inf") return Param{0, 1};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return param_from(parse_rational(text));
  const Integer c[] = {parse_integer(text.substr(0, colon)), parse_integer(text.substr(colon + 1))};
  if (c[0] == 0 && c[1] == 0) throw Error("parameter [0:0] is not a point");
  return Param(std::span<const Integer>(c));
}

RNC::RNC(RatMatrix forms) : forms_(std::move(forms)) {
  if (forms_.rows() < 2 || forms_.rows() != forms_.cols())
    throw Error("a rational normal curve in P^n needs an (n+1) x (n+1) form matrix");
  if (determinant(forms_) == 0) throw DegenerateConfiguration("coordinate forms are linearly dependent");
}

RNC RNC::standard(unsigned n) { return RNC(RatMatrix::identity(n + 1)); }

std::vector<Rational> RNC::pullback(const Hyperplane& h) const {
  if (h.size() != forms_.rows()) throw Error("hyperplane lives in a different space");
  std::vector<Rational> out(forms_.cols());
  for (std::size_t i = 0; i < forms_.rows(); ++i)
    for (std::size_t j = 0; j < forms_.cols(); ++j) out[j] += h[i] * forms_(i, j);
  return out;
}

ProjPoint rnc_point(const RNC& curve, const Param& t) {
  const unsigned n = curve.n();
  std::vector<Rational> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    const Integer mono = ipow(t[0], n - j) * ipow(t[1], j);
    for (unsigned i = 0; i <= n; ++i) c[i] += curve.forms()(i, j) * mono;
  }
  return ProjPoint(std::span<const Rational>(c));
}

std::vector<ProjPoint> osculating_flat(const RNC& curve, const Param& t, unsigned d) {
  const unsigned n = curve.n();
  if (d > n) throw Error("flat dimension exceeds ambient dimension");
  std::vector<ProjPoint> out;
  for (unsigned k = 0; k <= d; ++k) {
    // d^d / (da^(d-k) db^k) of a^(n-j) b^j at (a, b).
    std::vector<Integer> mono(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      if (n - j < d - k || j < k) continue;
      mono[j] = falling(n - j, d - k) * falling(j, k) * ipow(t[0], n - j - (d - k)) * ipow(t[1], j - k);
    }
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; j <= n; ++j) c[i] += curve.forms()(i, j) * mono[j];
    out.emplace_back(std::span<const Rational>(c));
  }
  return out;
}

bool has_full_contact(const RNC& curve, const Param& t, const Hyperplane& h) {
  const unsigned n = curve.n();
  const auto pb = curve.pullback(h);
  // (b s - a t)^n in the basis s^n, ..., t^n.
  std::vector<Integer> target(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    target[j] = binomial(n, j) * ipow(t[1], n - j) * ipow(-t[0], j);
  }
  RatMatrix m(2, n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    m(0, j) = pb[j];
    m(1, j) = target[j];
  }
  return std::any_of(pb.begin(), pb.end(), [](const Rational& c) { return c != 0; }) && rank(m) == 1;
}

Hyperplane osculating_hyperplane(const RNC& curve, const Param& t) {
  const auto flat = osculating_flat(curve, t, curve.n() - 1);
  const Hyperplane h = join_points(flat);
  if (!has_full_contact(curve, t, h)) throw InternalError("osculating hyperplane lacks full contact");
  return h;
}

ContactStar contact_star(const RNC& curve, std::vector<Param> params) {
  const std::size_t n = curve.n();
  if (params.size() < n) throw Error("a contact star needs at least n parameters");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j]) throw Error("contact star parameters must be distinct");
  std::vector<Hyperplane> hs;
  hs.reserve(params.size());
  for (const auto& t : params) hs.push_back(osculating_hyperplane(curve, t));
  PointSet points = star_configuration(hs);
  return ContactStar{curve, std::move(params), std::move(hs), std::move(points)};
}

std::vector<Param> random_params(Rng& rng, std::size_t count, long bound, std::span<const Param> avoid) {
  std::vector<Param> out;
  while (out.size() < count) {
    const Integer c[] = {rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
    if (c[0] == 0 && c[1] == 0) continue;
    Param p{std::span<const Integer>(c)};
    if (std::find(out.begin(), out.end(), p) != out.end()) continue;
    if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

HomForm standard_conic() {
  const HomForm x = HomForm::variable(3, 0), y = HomForm::variable(3, 1), z = HomForm::variable(3, 2);
  return y * y - x * z;
}

Hyperplane tangent_line_conic(const HomForm& conic, const ProjPoint& p) {
  if (conic.num_vars() != 3 || conic.degree() != 2) throw Error("expected a plane conic");
  if (conic.eval(p.coords()) != 0) throw Error("point is not on the conic");
  const auto g = conic.gradient(p.coords());
  if (std::all_of(g.begin(), g.end(), [](const Rational& c) { return c == 0; }))
    throw DegenerateConfiguration("singular point of the conic");
  return Hyperplane(std::span<const Rational>(g));
}

IntMatrix evaluation_matrix(std::span<const ProjPoint> ps, unsigned degree) {
  if (ps.empty()) return IntMatrix();
  const std::size_t vars = ps.front().size();
  const auto basis = monomial_basis(vars, degree);
  IntMatrix m(ps.size(), basis.size());
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Integer v = 1;
      for (std::size_t i = 0; i < vars; ++i)
        if (basis[c][i] != 0) v *= ipow(ps[r][i], basis[c][i]);
      m(r, c) = v;
    }
  return m;
}

HomForm conic_through_five(std::span<const ProjPoint> ps) {
  if (ps.size() != 5) throw Error("conic_through_five needs five points");
  const auto ker = kernel_basis(evaluation_matrix(ps, 2));
  if (ker.size() != 1) throw DegenerateConfiguration("five points do not determine a unique conic");
  return HomForm::from_coefficients(3, 2, std::span<const Integer>(ker[0]));
}

}  // namespace starconf
