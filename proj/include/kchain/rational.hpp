#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kchain/errors.hpp"

namespace kchain {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& q) {
  const BigInt den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

/// num/den in lowest terms with a positive denominator. Boost's rational
/// rejects a negative denominator for unbounded integers, so the sign is
/// moved to the numerator first.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Decimal integer with optional sign. Leading zeros are dropped before the
/// digits reach Boost, which would otherwise read "031" as octal.
inline BigInt parse_integer(const std::string& text) {
  std::size_t pos = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw InvalidArgument("malformed integer '" + text + "'");
  for (std::size_t k = pos; k < text.size(); ++k)
    if (text[k] < '0' || text[k] > '9') throw InvalidArgument("malformed integer '" + text + "'");
  while (pos + 1 < text.size() && text[pos] == '0') ++pos;
  const BigInt magnitude(text.substr(pos));
  return negative ? BigInt(-magnitude) : magnitude;
}

/// Parses "p/q" or "p". Throws InvalidArgument on malformed text or q == 0.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

/// Two-decimal display, ties rounded away from zero (16.665 -> 16.67).
inline std::string display2(const Rational& q) {
  const BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  const bool negative = num < 0;
  const BigInt scaled = (negative ? BigInt(-num) : num) * 100;
  const BigInt cents = (2 * scaled + den) / (2 * den);
  const BigInt whole = cents / 100;
  const int frac = static_cast<int>(cents % 100);
  std::string out = negative && cents != 0 ? "-" : "";
  out += whole.str();
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return out;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw InvalidArgument("zero raised to a negative power");
    return rpow(Rational(1) / base, -exponent);
  }
  const auto e = static_cast<std::uint64_t>(exponent);
  return Rational(ipow(numerator_of(base), e), ipow(denominator_of(base), e));
}

/// Product of base^exponent over the pairs. Negative exponents are rejected.
inline BigInt big_power_product(const std::vector<std::pair<BigInt, std::int64_t>>& factors) {
  BigInt product = 1;
  for (const auto& [base, exponent] : factors) {
    if (exponent < 0) {
      throw InvalidArgument("big_power_product: negative exponent " + std::to_string(exponent));
    }
    product *= ipow(base, static_cast<std::uint64_t>(exponent));
  }
  return product;
}

}  // namespace kchain
