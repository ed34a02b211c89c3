#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hodgespec {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "n" for integers, otherwise lowest-terms "num/den".
std::string format_rational(const Rational& q);

/// Accepts "[+-]digits" or "[+-]digits/digits". Floats and zero
/// denominators raise ErrorKind::ParseError.
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Largest s with s*s <= v, for v >= 0.
Integer isqrt(const Integer& v);

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
std::uint64_t binomial(long n, long k);

/// Converts an exact integer to uint64, raising InvalidArgument on overflow
/// or negative input.
std::uint64_t to_u64(const Integer& v);

}  // namespace hodgespec
