#include "nearadd/rational.hpp"

#include <charconv>
#include <limits>

#include "nearadd/errors.hpp"

namespace nearadd {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ConfigError("malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ConfigError("malformed rational '" + std::string(whole) + "'");
  BigInt result = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') {
      throw ConfigError("malformed rational '" + std::string(whole) + "'");
    }
    result = result * 10 + (ch - '0');
  }
  return negative ? BigInt(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty()) throw ConfigError("malformed rational '" + std::string(text) + "'");
    BigInt scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    const bool negative = !int_part.empty() && int_part[0] == '-';
    const BigInt whole =
        int_part.empty() || int_part == "-" || int_part == "+" ? BigInt(0) : parse_integer(int_part, text);
    const BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    if (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+')) {
      throw ConfigError("malformed rational '" + std::string(text) + "'");
    }
    BigInt magnitude = (whole < 0 ? BigInt(-whole) : whole) * scale + frac;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt floor(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

BigInt ceil(const Rational& value) { return -floor(Rational(-value)); }

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw ConfigError("value " + value.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::uint64_t floor_u64(const Rational& value) { return to_u64(floor(value)); }
std::uint64_t ceil_u64(const Rational& value) { return to_u64(ceil(value)); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ConfigError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational factor = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1U) result *= factor;
    e >>= 1U;
    if (e > 0) factor *= factor;
  }
  return result;
}

namespace {

BigInt ipow(const BigInt& base, unsigned long exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

}  // namespace

BigInt ceil_power(const BigInt& n, unsigned long num, unsigned long den) {
  if (den == 0) throw ConfigError("ceil_power: zero root");
  const BigInt target = ipow(n, num);
  if (target <= 1) return target;
  // Binary search the smallest d with d^den >= target.
  BigInt lo = 1;
  BigInt hi = 1;
  while (ipow(hi, den) < target) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (ipow(mid, den) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

bool le_power(const BigInt& value, const BigInt& n, long num, unsigned long den) {
  if (value < 0) return true;
  if (num >= 0) {
    return ipow(value, den) <= ipow(n, static_cast<unsigned long>(num));
  }
  // value <= n^(-k/den)  <=>  value^den * n^k <= 1
  return ipow(value, den) * ipow(n, static_cast<unsigned long>(-num)) <= 1;
}

long floor_log2(const Rational& x) {
  if (x < 1) throw ConfigError("floor_log2 requires x >= 1");
  long k = 0;
  Rational power = 2;
  while (power <= x) {
    power *= 2;
    ++k;
  }
  return k;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace nearadd
