#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bolano {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite decimal literal such as "0.125" or "2".
/// Throws ParseError on anything else.
Rational rational_from_decimal(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Inverse of to_string; also accepts decimal literals.
Rational rational_from_string(std::string_view text);

bool is_integer(const Rational& value);

/// Exact n-th root of a nonnegative rational, if it exists.
std::optional<Rational> exact_root(const Rational& value, unsigned n);

}  // namespace bolano
