#pragma once

// Exact scalars. Integer and Rational are GMP classes; a Rational is always
// kept canonical (positive denominator, reduced, zero is 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace starconf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A random instance landed on a special position; the caller should resample.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// A self-check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& value);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer parse_integer(std::string_view text);
/// Accepts "p" or "p/q".
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);
/// C(n, k) as a machine integer; throws on overflow.
std::uint64_t binomial_u64(unsigned n, unsigned k);

Integer gcd_of(std::span<const Integer> values);

/// Clears denominators and divides by the content; the first nonzero entry
/// becomes positive. The zero vector maps to itself.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);
std::vector<Integer> primitive_integer_vector(std::span<const Integer> values);

std::vector<Rational> to_rationals(std::span<const Integer> values);

}  // namespace starconf
