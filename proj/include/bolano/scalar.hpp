#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolano/rational.hpp"

namespace bolano {

/// A named commutative symbol. Identity is the name alone; the reality flag
/// only matters for conjugation.
struct SymbolAtom {
  std::string name;
  bool assumed_real = true;

  friend bool operator==(const SymbolAtom& a, const SymbolAtom& b) {
    return a.name == b.name;
  }
  friend std::strong_ordering operator<=>(const SymbolAtom& a,
                                          const SymbolAtom& b) {
    return a.name <=> b.name;
  }
};

/// Reserved name of the reduced Planck constant.
inline constexpr std::string_view kHbar = "hbar";

/// The non-rational part of one scalar term:
///   i^{imaginary} * prod sym^{exp} * prod exp(i * mult * sym).
/// Powers of i fold into the rational coefficient, so only i^0 and i^1 remain.
struct ScalarMonomial {
  using Factors = std::vector<std::pair<SymbolAtom, Rational>>;

  bool imaginary = false;
  Factors powers;  // sorted by symbol, no zero exponent
  Factors phases;  // sorted by symbol, no zero multiplier

  bool is_one() const { return !imaginary && powers.empty() && phases.empty(); }
  int i_power() const { return imaginary ? 1 : 0; }

  friend bool operator==(const ScalarMonomial& a, const ScalarMonomial& b);
  friend bool operator<(const ScalarMonomial& a, const ScalarMonomial& b);
};

/// Exact commutative coefficient: a finite sum of rational multiples of
/// ScalarMonomials. The empty sum is zero.
class Scalar {
 public:
  using Terms = std::map<ScalarMonomial, Rational>;

  Scalar() = default;
  Scalar(long long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar imaginary_unit();
  static Scalar symbol(const SymbolAtom& atom, const Rational& exponent = 1);
  static Scalar symbol(std::string_view name, const Rational& exponent = 1);
  /// exp(i * multiplier * atom)
  static Scalar phase(const SymbolAtom& atom, const Rational& multiplier);
  static Scalar from_term(ScalarMonomial monomial, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// The value if this scalar is a plain rational number.
  std::optional<Rational> as_rational() const;
  bool contains_symbol(std::string_view name) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  Scalar scaled(const Rational& factor) const;

  /// Raises to a rational power. Integer powers of any scalar are supported
  /// (negative ones only for single-term scalars); fractional powers only
  /// for single-term scalars whose coefficient has an exact root and which
  /// carry no factor of i.
  Scalar pow(const Rational& exponent) const;

  /// Complex conjugate. Throws ComplexSymbolUnsupported when a symbol not
  /// assumed real is present.
  Scalar conjugate() const;

  /// Sets the named symbol to 1 (phases of that symbol are left untouched).
  Scalar substitute_one(std::string_view name) const;

 private:
  void add_term(const ScalarMonomial& key, const Rational& coeff);

  Terms terms_;
};

Scalar scalar_conjugate(const Scalar& s);

/// Product of two monomials; the returned sign folds i*i = -1.
std::pair<ScalarMonomial, int> multiply_monomials(const ScalarMonomial& a,
                                                  const ScalarMonomial& b);

}  // namespace bolano
