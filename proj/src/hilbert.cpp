#include "starconf/hilbert.hpp"

#include <algorithm>
#include <numeric>

#include "starconf/linalg.hpp"

namespace starconf {

HVector::HVector(std::vector<std::uint64_t> values) : h(std::move(values)) {
  while (!h.empty() && h.back() == 0) h.pop_back();
}

std::uint64_t HVector::degree() const { return std::accumulate(h.begin(), h.end(), std::uint64_t{0}); }

bool HVector::symmetric() const { return std::equal(h.begin(), h.end(), h.rbegin()); }

std::string HVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h[i]);
  }
  return out + ")";
}

CIType::CIType(unsigned x, unsigned y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (a < 1) throw Error("complete intersection degrees must be positive");
}

namespace {

Integer falling(unsigned long n, unsigned long k) {
  Integer out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= n - i;
  return out;
}

}  // namespace

IntMatrix conditions_matrix(const FatScheme& z, unsigned d) {
  const std::size_t vars = z.ambient_dim() + 1;
  const auto basis = monomial_basis(vars, d);
  IntMatrix m;
  m = IntMatrix(0, basis.size());
  std::vector<Integer> row(basis.size());
  for (const auto& item : z.items()) {
    const unsigned order = std::min(item.multiplicity - 1, d);
    // Power table P_i^e for e <= d.
    std::vector<std::vector<Integer>> powers(vars, std::vector<Integer>(d + 1));
    for (std::size_t i = 0; i < vars; ++i) {
      powers[i][0] = 1;
      for (unsigned e = 1; e <= d; ++e) powers[i][e] = powers[i][e - 1] * item.point[i];
    }
    for (const auto& alpha : monomial_basis(vars, order)) {
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto& beta = basis[c];
        Integer v = 1;
        for (std::size_t i = 0; i < vars && v != 0; ++i) {
          if (beta[i] < alpha[i]) {
            v = 0;
          } else {
            v *= falling(beta[i], alpha[i]) * powers[i][beta[i] - alpha[i]];
          }
        }
        row[c] = v;
      }
      m.append_row(row);
    }
  }
  return m;
}

std::uint64_t hilbert_function(const FatScheme& z, unsigned d) {
  if (z.items().empty()) return 0;
  return rank(conditions_matrix(z, d));
}

HilbertTable hilbert_table(const FatScheme& z) {
  HilbertTable out;
  const std::uint64_t deg = z.degree();
  if (deg == 0) return out;
  for (unsigned d = 0;; ++d) {
    const auto value = hilbert_function(z, d);
    if (value > deg || d > deg) throw InternalError("Hilbert function failed to stabilize at the scheme degree");
    out.values.push_back(value);
    if (value == deg) break;
  }
  std::vector<std::uint64_t> diff(out.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (i > 0 && out.values[i] < out.values[i - 1]) throw InternalError("Hilbert function decreased");
    diff[i] = out.values[i] - (i ? out.values[i - 1] : 0);
  }
  out.h = HVector(std::move(diff));
  return out;
}

HVector h_vector(const FatScheme& z) { return hilbert_table(z).h; }

std::vector<HomForm> ideal_slice(const FatScheme& z, unsigned d) {
  const std::size_t vars = z.ambient_dim() + 1;
  std::vector<HomForm> out;
  if (z.items().empty()) {
    const auto basis = monomial_basis(vars, d);
    for (const auto& e : basis) {
      HomForm f(vars, d);
      f.add_term(e, 1);
      out.push_back(std::move(f));
    }
    return out;
  }
  for (const auto& v : kernel_basis(conditions_matrix(z, d)))
    out.push_back(HomForm::from_coefficients(vars, d, std::span<const Integer>(v)));
  return out;
}

bool same_span(const std::vector<HomForm>& a, const std::vector<HomForm>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  RatMatrix ma, mb, both;
  for (const auto& f : a) {
    ma.append_row(f.coefficient_vector());
    both.append_row(f.coefficient_vector());
  }
  for (const auto& f : b) {
    if (f.num_vars() != a.front().num_vars() || f.degree() != a.front().degree()) return false;
    mb.append_row(f.coefficient_vector());
    both.append_row(f.coefficient_vector());
  }
  const auto ra = rank(ma);
  return ra == rank(mb) && ra == rank(both);
}

HVector generic_star_hvector(unsigned r, unsigned n) {
  if (n < 1 || r < n) throw Error("generic star h-vector needs r >= n >= 1");
  std::vector<std::uint64_t> h;
  for (unsigned i = 0; i <= r - n; ++i) h.push_back(binomial_u64(n - 1 + i, n - 1));
  return HVector(std::move(h));
}

HVector two_fat_hvector(unsigned m, unsigned n) {
  if (m < n) std::swap(m, n);
  std::vector<std::uint64_t> h;
  for (unsigned i = 1; i <= m; ++i) h.push_back(i);
  for (unsigned i = n; i >= 1; --i) h.push_back(i);
  return HVector(std::move(h));
}

HVector star_difference_hvector(unsigned s, unsigned t) {
  if (t < 1) throw Error("star difference needs t >= 1");
  std::vector<std::uint64_t> h;
  for (unsigned i = 1; i < t; ++i) h.push_back(i);
  for (unsigned i = 0; i < s; ++i) h.push_back(t);
  return HVector(std::move(h));
}

HVector ci_hvector(CIType ct) {
  std::vector<std::uint64_t> h;
  for (unsigned i = 1; i < ct.a; ++i) h.push_back(i);
  for (unsigned i = 0; i < ct.b - ct.a + 1; ++i) h.push_back(ct.a);
  for (unsigned i = ct.a - 1; i >= 1; --i) h.push_back(i);
  return HVector(std::move(h));
}

HVector liaison_linked_hvector(CIType ct, const HVector& h_x) {
  const HVector ci = ci_hvector(ct);
  const std::size_t top = ct.a + ct.b - 2;
  if (h_x.size() > top + 1) throw Error("X not linkable inside CI(" + std::to_string(ct.a) + "," + std::to_string(ct.b) + ")");
  std::vector<std::uint64_t> h(top + 1);
  for (std::size_t t = 0; t <= top; ++t) {
    const std::size_t k = top - t;
    if (h_x[k] > ci[k]) throw Error("X not linkable inside CI(" + std::to_string(ct.a) + "," + std::to_string(ct.b) + ")");
    h[t] = ci[k] - h_x[k];
  }
  return HVector(std::move(h));
}

std::uint64_t three_fat_hilbert(std::vector<unsigned> mults, unsigned d) {
  std::erase(mults, 0u);
  std::sort(mults.begin(), mults.end(), std::greater<>());
  if (mults.size() > 3) throw Error("three_fat_hilbert takes at most three multiplicities");
  std::uint64_t deg = 0;
  for (auto m : mults) deg += binomial_u64(m + 1, 2);
  if (mults.empty()) return 0;
  if (mults.size() == 1) return std::min<std::uint64_t>(binomial_u64(d + 2, 2), deg);
  if (mults.size() == 2) {
    const auto h = two_fat_hvector(mults[0], mults[1]);
    std::uint64_t sum = 0;
    for (unsigned i = 0; i <= d && i < h.size(); ++i) sum += h[i];
    return sum;
  }
  if (d + 1 >= mults[0] + mults[1]) return deg;
  if (d == 0) return 1;
  return d + 1 + three_fat_hilbert({mults[0] - 1, mults[1] - 1, mults[2]}, d - 1);
}

HVector three_fat_hvector(std::vector<unsigned> mults) {
  std::uint64_t deg = 0;
  for (auto m : mults) deg += binomial_u64(m + 1, 2);
  std::vector<std::uint64_t> h;
  std::uint64_t prev = 0;
  for (unsigned d = 0; prev < deg; ++d) {
    const auto value = three_fat_hilbert(mults, d);
    h.push_back(value - prev);
    prev = value;
  }
  return HVector(std::move(h));
}

HVector three_fat_3had_hvector(unsigned r, unsigned s, unsigned t) {
  if (s < 2 || r < s) throw Error("three_fat_3had_hvector needs r >= s >= 2");
  if (t + 1 < r + s || t > r + s + 1) throw Error("three_fat_3had_hvector needs t in {r+s-1, r+s, r+s+1}");
  std::vector<std::uint64_t> h;
  for (unsigned i = 1; i < t; ++i) h.push_back(i);
  for (unsigned k = 0; k + 2 <= s; ++k) h.push_back(r + s - 2 - 2 * k);
  for (unsigned i = r - s; i >= 1; --i) h.push_back(i);
  return HVector(std::move(h));
}

}  // namespace starconf
