#include "starconf/form.hpp"

#include <sstream>

#include "starconf/linalg.hpp"
#include "starconf/random.hpp"

namespace starconf {

namespace {

void basis_rec(std::size_t var, std::size_t num_vars, unsigned remaining, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var + 1 == num_vars) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    basis_rec(var + 1, num_vars, remaining - e, cur, out);
  }
}

unsigned total(const Exponent& e) {
  unsigned s = 0;
  for (auto v : e) s += v;
  return s;
}

template <class T>
Rational eval_impl(const HomForm& f, std::span<const T> point) {
  if (point.size() != f.num_vars()) throw Error("eval: point dimension does not match form");
  // Powers are cached per variable; degrees stay small.
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(f.degree() + 1);
    powers[i][0] = 1;
    for (unsigned k = 1; k <= f.degree(); ++k) powers[i][k] = powers[i][k - 1] * Rational(point[i]);
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : f.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= powers[i][e[i]];
    sum += term;
  }
  return sum;
}

const char* kVarNames[] = {"x", "y", "z", "t", "w"};

std::string var_name(std::size_t num_vars, std::size_t i) {
  if (num_vars <= 5) return kVarNames[i];
  return "x" + std::to_string(i);
}

}  // namespace

std::vector<Exponent> monomial_basis(std::size_t num_vars, unsigned degree) {
  std::vector<Exponent> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(num_vars, 0);
  basis_rec(0, num_vars, degree, cur, out);
  return out;
}

HomForm::HomForm(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {}

HomForm HomForm::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw Error("variable index out of range");
  HomForm f(num_vars, 1);
  Exponent e(num_vars, 0);
  e[index] = 1;
  f.terms_[e] = 1;
  return f;
}

HomForm HomForm::constant(std::size_t num_vars, const Rational& value) {
  HomForm f(num_vars, 0);
  if (value != 0) f.terms_[Exponent(num_vars, 0)] = value;
  return f;
}

HomForm HomForm::linear(std::span<const Integer> coeffs) {
  HomForm f(coeffs.size(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    f.add_term(e, Rational(coeffs[i]));
  }
  return f;
}

HomForm HomForm::from_coefficients(std::size_t num_vars, unsigned degree,
                                   std::span<const Integer> coeffs) {
  const auto basis = monomial_basis(num_vars, degree);
  if (basis.size() != coeffs.size()) throw Error("coefficient count does not match monomial basis");
  HomForm f(num_vars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) f.terms_[basis[i]] = Rational(coeffs[i]);
  return f;
}

HomForm HomForm::from_coefficients(std::size_t num_vars, unsigned degree,
                                   std::span<const Rational> coeffs) {
  const auto basis = monomial_basis(num_vars, degree);
  if (basis.size() != coeffs.size()) throw Error("coefficient count does not match monomial basis");
  HomForm f(num_vars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) f.terms_[basis[i]] = coeffs[i];
  return f;
}

Rational HomForm::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HomForm::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_ || total(e) != degree_) throw Error("term is not homogeneous of the form's degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<Rational> HomForm::coefficient_vector() const {
  const auto basis = monomial_basis(num_vars_, degree_);
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (const auto& e : basis) out.push_back(coefficient(e));
  return out;
}

Rational HomForm::eval(std::span<const Rational> point) const { return eval_impl(*this, point); }
Rational HomForm::eval(std::span<const Integer> point) const { return eval_impl(*this, point); }

HomForm HomForm::partial(std::size_t var) const {
  if (var >= num_vars_) throw Error("partial: variable index out of range");
  if (degree_ == 0) return HomForm(num_vars_, 0);
  HomForm out(num_vars_, degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

std::vector<Rational> HomForm::gradient(std::span<const Integer> point) const {
  std::vector<Rational> g;
  g.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) g.push_back(partial(i).eval(point));
  return g;
}

HomForm HomForm::substitute(const RatMatrix& a) const {
  if (a.rows() != num_vars_) throw Error("substitute: matrix rows must equal the number of variables");
  const std::size_t new_vars = a.cols();
  std::vector<HomForm> images;
  images.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    HomForm l(new_vars, 1);
    for (std::size_t j = 0; j < new_vars; ++j) {
      Exponent e(new_vars, 0);
      e[j] = 1;
      l.add_term(e, a(i, j));
    }
    images.push_back(std::move(l));
  }
  // Cache powers of each image; terms share them heavily.
  std::vector<std::vector<HomForm>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(HomForm::constant(new_vars, 1));
    for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  HomForm out(new_vars, degree_);
  for (const auto& [e, c] : terms_) {
    HomForm t = HomForm::constant(new_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] != 0) t = t * powers[i][e[i]];
    out += t;
  }
  return out;
}

HomForm HomForm::operator-() const {
  HomForm out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

HomForm& HomForm::operator+=(const HomForm& other) {
  if (other.num_vars_ != num_vars_) throw Error("adding forms in different rings");
  if (other.is_zero()) return *this;
  if (is_zero()) {
    degree_ = other.degree_;
  } else if (other.degree_ != degree_) {
    throw Error("adding forms of different degrees");
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HomForm& HomForm::operator-=(const HomForm& other) { return *this += -other; }

HomForm& HomForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HomForm operator*(const HomForm& a, const HomForm& b) {
  if (a.num_vars_ != b.num_vars_) throw Error("multiplying forms in different rings");
  HomForm out(a.num_vars_, a.degree_ + b.degree_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

HomForm HomForm::pow(unsigned k) const {
  HomForm out = HomForm::constant(num_vars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

HomForm HomForm::normalized() const {
  if (is_zero()) return *this;
  const auto coeffs = coefficient_vector();
  const auto prim = primitive_integer_vector(std::span<const Rational>(coeffs));
  return from_coefficients(num_vars_, degree_, std::span<const Integer>(prim));
}

std::string HomForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (auto v : e) has_var = has_var || v != 0;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(num_vars_, i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!has_var) {
      os << starconf::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << starconf::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

bool proportional(const HomForm& a, const HomForm& b) {
  if (a.num_vars() != b.num_vars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree() || a.terms().size() != b.terms().size()) return false;
  const Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
  for (const auto& [e, c] : a.terms()) {
    if (b.coefficient(e) * ratio != c) return false;
  }
  return true;
}

namespace {

// Coefficient forms of f viewed as a polynomial in x_var: result[i] is the
// coefficient of x_var^i, a form of degree deg f - i in the other variables.
std::vector<HomForm> split_by_variable(const HomForm& f, std::size_t var) {
  const std::size_t k = f.num_vars() - 1;
  std::vector<HomForm> out;
  for (unsigned i = 0; i <= f.degree(); ++i) out.emplace_back(k, f.degree() - i);
  for (const auto& [e, c] : f.terms()) {
    Exponent rest;
    rest.reserve(k);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != var) rest.push_back(e[j]);
    out[e[var]].add_term(rest, c);
  }
  return out;
}

Rational sylvester_at(const std::vector<HomForm>& fc, const std::vector<HomForm>& gc,
                      std::span<const Rational> point) {
  const std::size_t a = fc.size() - 1;
  const std::size_t b = gc.size() - 1;
  std::vector<Rational> fv(a + 1), gv(b + 1);
  for (std::size_t i = 0; i <= a; ++i) fv[i] = fc[i].eval(point);
  for (std::size_t i = 0; i <= b; ++i) gv[i] = gc[i].eval(point);
  const std::size_t n = a + b;
  RatMatrix s(n, n);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t i = 0; i <= a; ++i) s(r, r + i) = fv[a - i];
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t i = 0; i <= b; ++i) s(b + r, r + i) = gv[b - i];
  return determinant(s);
}

}  // namespace

HomForm sylvester_resultant(const HomForm& f, const HomForm& g, std::size_t var) {
  if (f.num_vars() != g.num_vars()) throw Error("resultant of forms in different rings");
  if (f.num_vars() < 2) throw Error("resultant needs at least two variables");
  if (var >= f.num_vars()) throw Error("resultant: variable index out of range");
  if (f.degree() == 0 || g.degree() == 0 || f.is_zero() || g.is_zero())
    throw Error("resultant needs nonzero forms of positive degree");
  const auto fc = split_by_variable(f, var);
  const auto gc = split_by_variable(g, var);
  if (fc.back().is_zero() && gc.back().is_zero())
    throw DegenerateConfiguration(
        "degenerate leading coefficients in the eliminated variable; apply a coordinate change first");

  const std::size_t k = f.num_vars() - 1;
  const unsigned out_degree = f.degree() * g.degree();
  const auto basis = monomial_basis(k, out_degree);
  const std::size_t count = basis.size();

  // Interpolation nodes. Binary forms use (1, j), whose evaluation matrix is
  // a nonsingular Vandermonde matrix; otherwise random nodes until the
  // evaluation matrix is invertible.
  Rng rng(0x7e5017a47ULL);
  std::vector<std::vector<Rational>> nodes;
  RatMatrix eval_matrix;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 20) throw InternalError("resultant interpolation nodes kept failing");
    nodes.clear();
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Rational> q(k);
      if (k == 2 && attempt == 0) {
        q[0] = 1;
        q[1] = static_cast<long>(i);
      } else {
        for (auto& v : q) v = static_cast<long>(rng.uniform(-3 * static_cast<long>(count), 3 * static_cast<long>(count)));
      }
      nodes.push_back(std::move(q));
    }
    eval_matrix = RatMatrix(count, count);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        Rational m = 1;
        for (std::size_t v = 0; v < k; ++v)
          for (unsigned p = 0; p < basis[j][v]; ++p) m *= nodes[i][v];
        eval_matrix(i, j) = m;
      }
    }
    if (rank(eval_matrix) == count) break;
  }

  std::vector<Rational> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = sylvester_at(fc, gc, nodes[i]);
  bool all_zero = true;
  for (const auto& v : values) all_zero = all_zero && v == 0;
  if (all_zero) return HomForm(k, out_degree);

  const auto coeffs = solve(eval_matrix, values);
  HomForm res = HomForm::from_coefficients(k, out_degree, std::span<const Rational>(coeffs));

  std::vector<Rational> check(k);
  for (auto& v : check) v = static_cast<long>(rng.uniform(-97, 97));
  if (res.eval(std::span<const Rational>(check)) != sylvester_at(fc, gc, check))
    throw InternalError("resultant interpolation failed its self-check");
  return res;
}

bool coprime(const HomForm& f, const HomForm& g) {
  if (f.is_zero() || g.is_zero()) throw Error("coprime: zero form");
  if (f.num_vars() != g.num_vars()) throw Error("coprime: forms in different rings");
  if (f.degree() == 0 || g.degree() == 0) return true;
  const std::size_t n = f.num_vars();
  const std::size_t last = n - 1;
  Rng rng(0xc0991e5ULL);
  for (int attempt = 0; attempt < 3; ++attempt) {
    const RatMatrix a = random_invertible(rng, n, 9);
    const HomForm fa = f.substitute(a);
    const HomForm ga = g.substitute(a);
    Exponent ef(n, 0), eg(n, 0);
    ef[last] = fa.degree();
    eg[last] = ga.degree();
    if (fa.coefficient(ef) == 0 && ga.coefficient(eg) == 0) continue;
    return !sylvester_resultant(fa, ga, last).is_zero();
  }
  throw DegenerateConfiguration("coprime: three coordinate changes all left degenerate leading coefficients");
}

}  // namespace starconf
