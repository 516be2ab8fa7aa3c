#include "starconf/polygon.hpp"

#include "starconf/linalg.hpp"
#include "starconf/random.hpp"
#include "starconf/univariate.hpp"

namespace starconf {

bool residual_collinearity_check(const HomForm& g1, const HomForm& g2, const ProjPoint& a4, const ProjPoint& a8,
                                 std::span<const ProjPoint> excluded) {
  const Hyperplane lambda = line_through(a4, a8);
  for (const auto& p : excluded)
    if (incident(p, lambda)) throw DegenerateConfiguration("excluded point lies on the test line, resample");
  if (proportional(g1, g2)) return true;
  RatMatrix restrict(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    restrict(i, 0) = a4[i];
    restrict(i, 1) = a8[i];
  }
  return proportional(g1.substitute(restrict), g2.substitute(restrict));
}

PencilResult pencil_intersection_check(const HomForm& g1, const HomForm& g3, const HomForm& g2, const HomForm& g4) {
  const HomForm* conics[] = {&g1, &g3, &g2, &g4};
  RatMatrix m;
  for (const auto* g : conics) {
    if (g->num_vars() != 3 || g->degree() != 2) throw Error("pencil check expects plane conics");
    m.append_row(g->coefficient_vector());
  }
  PencilResult out;
  out.rank = rank(m);
  out.verdict = out.rank <= 3;
  if (!out.verdict) return out;
  for (const auto& c : kernel_basis(m.transposed())) {
    HomForm member = Rational(c[0]) * g1 + Rational(c[1]) * g3;
    if (!member.is_zero()) {
      out.common = member.normalized();
      break;
    }
  }
  return out;
}

ConcurrencyResult three_conics_concurrent(const HomForm& g12, const HomForm& g13, const HomForm& g23,
                                          std::uint64_t seed) {
  Rng rng(seed);
  ConcurrencyResult out;
  for (int round = 0; round < 3; ++round) {
    bool decided = false;
    for (int attempt = 0; attempt < 10 && !decided; ++attempt) {
      const RatMatrix a = random_invertible(rng, 3, 9);
      const HomForm h12 = g12.substitute(a), h13 = g13.substitute(a), h23 = g23.substitute(a);
      try {
        const HomForm r1 = sylvester_resultant(h12, h13, 2);
        const HomForm r2 = sylvester_resultant(h12, h23, 2);
        if (r1.is_zero() || r2.is_zero()) throw DegenerateConfiguration("conics share a component");
        out.sub_verdicts.push_back(binary_gcd_degree(r1, r2) >= 1);
        decided = true;
      } catch (const DegenerateConfiguration& e) {
        if (std::string_view(e.what()) == "conics share a component") throw;
      }
    }
    if (!decided) throw Error("resultants stayed degenerate under every coordinate change");
  }
  int yes = 0;
  for (bool v : out.sub_verdicts) yes += v ? 1 : 0;
  out.verdict = yes * 2 > static_cast<int>(out.sub_verdicts.size());
  return out;
}

std::vector<ProjPoint> circumscribed_polygon(std::span<const Param> params) {
  if (params.size() < 3) throw Error("a polygon needs at least three sides");
  const RNC conic = RNC::standard(2);
  const HomForm eq = standard_conic();
  std::vector<Hyperplane> tangents;
  for (const auto& t : params) tangents.push_back(tangent_line_conic(eq, rnc_point(conic, t)));
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < tangents.size(); ++i) out.push_back(meet(tangents[i], tangents[(i + 1) % tangents.size()]));
  return out;
}

bool hexagon_diagonals_concurrent(std::span<const ProjPoint> v) {
  if (v.size() != 6) throw Error("a hexagon has six vertices");
  for (std::size_t i = 0; i < 3; ++i)
    if (v[i] == v[i + 3]) throw DegenerateConfiguration("degenerate hexagon, resample");
  IntMatrix m;
  for (std::size_t i = 0; i < 3; ++i) m.append_row(line_through(v[i], v[i + 3]).coords());
  return determinant(m) == 0;
}

bool brianchon_check(std::span<const Param> params) {
  if (params.size() != 6) throw Error("Brianchon check needs six tangency parameters");
  return hexagon_diagonals_concurrent(circumscribed_polygon(params));
}

OctagonConics octagon_conics(std::span<const ProjPoint> a) {
  if (a.size() != 8) throw Error("an octagon has eight vertices");
  auto A = [&](std::size_t i) -> const ProjPoint& { return a[(i - 1) % 8]; };
  auto l = [&](std::size_t i, std::size_t j) { return line_through(A(i), A(j)); };
  const ProjPoint p[] = {meet(l(1, 8), l(2, 3)), meet(l(1, 2), l(3, 4)), meet(l(2, 3), l(4, 5)),
                         meet(l(3, 4), l(5, 6))};
  auto gamma = [&](std::size_t i) {
    const ProjPoint five[] = {A(i), A(i + 1), A(i + 4), A(i + 5), p[i - 1]};
    return conic_through_five(five);
  };
  return OctagonConics{gamma(1), gamma(2), gamma(3), gamma(4)};
}

bool octagon_residual_collinearity(std::span<const ProjPoint> a) {
  const auto c = octagon_conics(a);
  const ProjPoint excluded[] = {a[1], a[5]};
  return residual_collinearity_check(c.g1, c.g2, a[3], a[7], excluded);
}

PencilResult octagon_pencil_check(std::span<const ProjPoint> a) {
  const auto c = octagon_conics(a);
  return pencil_intersection_check(c.g1, c.g3, c.g2, c.g4);
}

}  // namespace starconf
