#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nearadd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or a plain decimal like "0.05" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// floor/ceil narrowed to uint64; throws ConfigError if the value is negative
/// or does not fit.
std::uint64_t floor_u64(const Rational& value);
std::uint64_t ceil_u64(const Rational& value);
std::uint64_t to_u64(const BigInt& value);

/// base^exponent for any integer exponent (base must be nonzero if exponent < 0).
Rational pow(const Rational& base, long exponent);

/// Smallest integer d >= 0 with d^den >= n^num, i.e. ceil(n^(num/den)) for
/// num, den > 0.
BigInt ceil_power(const BigInt& n, unsigned long num, unsigned long den);

/// Exact test value <= n^(num/den) for value >= 0, n >= 1, den > 0 and any
/// integer num (a negative num gives a bound strictly below 1).
bool le_power(const BigInt& value, const BigInt& n, long num, unsigned long den);

/// Largest k with 2^k <= x, for x >= 1.
long floor_log2(const Rational& x);

double to_double(const Rational& value);

}  // namespace nearadd
