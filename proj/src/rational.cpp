#include "bolano/rational.hpp"

#include <cctype>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

BigInt pow10(std::size_t n) {
  BigInt out = 1;
  for (std::size_t i = 0; i < n; ++i) out *= 10;
  return out;
}

std::optional<BigInt> integer_root(const BigInt& value, unsigned n) {
  if (value < 0) return std::nullopt;
  if (value < 2 || n == 1) return value;
  // Largest r with r^n <= value, by bisection on [0, 2^(bits/n + 1)].
  const auto bits = boost::multiprecision::msb(value) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / n + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, n) <= value) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (boost::multiprecision::pow(lo, n) != value) return std::nullopt;
  return lo;
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt digits = 0;
  std::size_t fraction_digits = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_point) throw ParseError("second decimal point", pos, {"digit"});
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("malformed decimal literal", pos, {"digit", "."});
    }
    seen_digit = true;
    digits = digits * 10 + (c - '0');
    if (seen_point) ++fraction_digits;
  }
  if (!seen_digit) throw ParseError("empty decimal literal", pos, {"digit"});
  Rational value(digits, pow10(fraction_digits));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return rational_from_decimal(text);
  const Rational num = rational_from_decimal(text.substr(0, slash));
  const Rational den = rational_from_decimal(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return num / den;
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::optional<Rational> exact_root(const Rational& value, unsigned n) {
  if (n == 0) return std::nullopt;
  auto num = integer_root(boost::multiprecision::numerator(value), n);
  auto den = integer_root(boost::multiprecision::denominator(value), n);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace bolano
