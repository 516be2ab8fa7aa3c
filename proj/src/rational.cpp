#include "starconf/rational.hpp"

#include <cctype>
#include <limits>

namespace starconf {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) throw Error("empty integer literal");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-')))
      throw Error("malformed integer literal '" + std::string(text) + "'");
  }
  if (s == "-") throw Error("malformed integer literal '-'");
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  const Integer r = binomial(n, k);
  if (!r.fits_ulong_p()) throw Error("binomial coefficient overflow");
  return r.get_ui();
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Integer> primitive_integer_vector(std::span<const Integer> values) {
  std::vector<Integer> out(values.begin(), values.end());
  const Integer g = gcd_of(out);
  if (g == 0) return out;
  int sign = 0;
  for (const auto& v : out) {
    if (v != 0) {
      sign = sgn(v);
      break;
    }
  }
  for (auto& v : out) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (sign < 0) v = -v;
  }
  return out;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  for (const auto& v : values) scaled.push_back(v.get_num() * (l / v.get_den()));
  return primitive_integer_vector(std::span<const Integer>(scaled));
}

std::vector<Rational> to_rationals(std::span<const Integer> values) {
  return {values.begin(), values.end()};
}

}  // namespace starconf
