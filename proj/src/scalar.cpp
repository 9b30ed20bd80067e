#include "bolano/scalar.hpp"

#include <algorithm>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

using Factors = ScalarMonomial::Factors;

bool factors_equal(const Factors& a, const Factors& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
  }
  return true;
}

// -1, 0, 1 like a three-way comparison.
int factors_compare(const Factors& a, const Factors& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first.name != b[i].first.name) {
      return a[i].first.name < b[i].first.name ? -1 : 1;
    }
    if (a[i].second != b[i].second) return a[i].second < b[i].second ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

Factors merge_factors(const Factors& a, const Factors& b) {
  Factors out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Rational sum = a[i].second + b[j].second;
      if (!sum.is_zero()) out.emplace_back(a[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

Factors scale_factors(const Factors& f, const Rational& by) {
  Factors out;
  if (by.is_zero()) return out;
  out.reserve(f.size());
  for (const auto& [atom, e] : f) out.emplace_back(atom, e * by);
  return out;
}

Rational integer_power(const Rational& base, long long n) {
  Rational out = 1;
  Rational b = base;
  bool invert = n < 0;
  unsigned long long m = invert ? static_cast<unsigned long long>(-n)
                                : static_cast<unsigned long long>(n);
  while (m) {
    if (m & 1ULL) out *= b;
    b *= b;
    m >>= 1ULL;
  }
  return invert ? Rational(1 / out) : out;
}

}  // namespace

bool operator==(const ScalarMonomial& a, const ScalarMonomial& b) {
  return a.imaginary == b.imaginary && factors_equal(a.powers, b.powers) &&
         factors_equal(a.phases, b.phases);
}

bool operator<(const ScalarMonomial& a, const ScalarMonomial& b) {
  if (a.imaginary != b.imaginary) return !a.imaginary;
  if (int c = factors_compare(a.powers, b.powers); c != 0) return c < 0;
  return factors_compare(a.phases, b.phases) < 0;
}

std::pair<ScalarMonomial, int> multiply_monomials(const ScalarMonomial& a,
                                                  const ScalarMonomial& b) {
  ScalarMonomial out;
  int sign = 1;
  if (a.imaginary && b.imaginary) {
    sign = -1;
  } else {
    out.imaginary = a.imaginary || b.imaginary;
  }
  out.powers = a.powers.empty()   ? b.powers
               : b.powers.empty() ? a.powers
                                  : merge_factors(a.powers, b.powers);
  out.phases = a.phases.empty()   ? b.phases
               : b.phases.empty() ? a.phases
                                  : merge_factors(a.phases, b.phases);
  return {std::move(out), sign};
}

Scalar::Scalar(long long value) {
  if (value != 0) terms_.emplace(ScalarMonomial{}, Rational(value));
}

Scalar::Scalar(const Rational& value) {
  if (!value.is_zero()) terms_.emplace(ScalarMonomial{}, value);
}

Scalar Scalar::imaginary_unit() {
  ScalarMonomial m;
  m.imaginary = true;
  return from_term(std::move(m), 1);
}

Scalar Scalar::symbol(const SymbolAtom& atom, const Rational& exponent) {
  if (atom.name.empty()) throw InvariantViolation("empty symbol name");
  ScalarMonomial m;
  if (!exponent.is_zero()) m.powers.emplace_back(atom, exponent);
  return from_term(std::move(m), 1);
}

Scalar Scalar::symbol(std::string_view name, const Rational& exponent) {
  return symbol(SymbolAtom{std::string(name)}, exponent);
}

Scalar Scalar::phase(const SymbolAtom& atom, const Rational& multiplier) {
  if (atom.name.empty()) throw InvariantViolation("empty symbol name");
  ScalarMonomial m;
  if (!multiplier.is_zero()) m.phases.emplace_back(atom, multiplier);
  return from_term(std::move(m), 1);
}

Scalar Scalar::from_term(ScalarMonomial monomial, const Rational& coeff) {
  Scalar out;
  if (!coeff.is_zero()) out.terms_.emplace(std::move(monomial), coeff);
  return out;
}

std::optional<Rational> Scalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

bool Scalar::contains_symbol(std::string_view name) const {
  for (const auto& [key, coeff] : terms_) {
    for (const auto& [atom, e] : key.powers) {
      if (atom.name == name) return true;
    }
    for (const auto& [atom, e] : key.phases) {
      if (atom.name == name) return true;
    }
  }
  return false;
}

void Scalar::add_term(const ScalarMonomial& key, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& [key, coeff] : out.terms_) coeff = -coeff;
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (auto r = a.as_rational()) return b.scaled(*r);
  if (auto r = b.as_rational()) return a.scaled(*r);
  Scalar out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      auto [key, sign] = multiply_monomials(ka, kb);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(key, c);
    }
  }
  return out;
}

Scalar Scalar::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  if (factor == 1) return *this;
  Scalar out = *this;
  for (auto& [key, coeff] : out.terms_) coeff *= factor;
  return out;
}

Scalar Scalar::pow(const Rational& exponent) const {
  if (exponent == 0) return Scalar(1);
  if (is_integer(exponent) && exponent > 0) {
    auto n = static_cast<unsigned long long>(
        boost::multiprecision::numerator(exponent));
    Scalar result(1);
    Scalar base = *this;
    while (n) {
      if (n & 1ULL) result *= base;
      n >>= 1ULL;
      if (n) base *= base;
    }
    return result;
  }
  if (is_zero()) {
    throw UnsupportedScalarPower("zero raised to a non-positive power");
  }
  if (!is_monomial()) {
    throw UnsupportedScalarPower(
        "negative or fractional power of a multi-term scalar");
  }
  const auto& [key, coeff] = *terms_.begin();
  ScalarMonomial out;
  Rational out_coeff;
  if (is_integer(exponent)) {
    const auto n = static_cast<long long>(
        boost::multiprecision::numerator(exponent));
    out_coeff = integer_power(coeff, n);
    if (key.imaginary) {
      // i^n for negative n
      switch (((n % 4) + 4) % 4) {
        case 1: out.imaginary = true; break;
        case 2: out_coeff = -out_coeff; break;
        case 3: out.imaginary = true; out_coeff = -out_coeff; break;
        default: break;
      }
    }
  } else {
    if (key.imaginary) {
      throw UnsupportedScalarPower("fractional power of an imaginary scalar");
    }
    if (coeff < 0) {
      throw UnsupportedScalarPower("fractional power of a negative number");
    }
    const BigInt p = boost::multiprecision::numerator(exponent);
    const BigInt q = boost::multiprecision::denominator(exponent);
    auto root = exact_root(coeff, static_cast<unsigned>(q));
    if (!root) {
      throw UnsupportedScalarPower("coefficient " + to_string(coeff) +
                                   " has no exact root of order " + q.str());
    }
    out_coeff = integer_power(*root, static_cast<long long>(p));
  }
  out.powers = scale_factors(key.powers, exponent);
  out.phases = scale_factors(key.phases, exponent);
  return from_term(std::move(out), out_coeff);
}

Scalar Scalar::conjugate() const {
  Scalar out;
  for (const auto& [key, coeff] : terms_) {
    for (const auto& [atom, e] : key.powers) {
      if (!atom.assumed_real) {
        throw ComplexSymbolUnsupported("cannot conjugate complex symbol '" +
                                       atom.name + "'");
      }
    }
    ScalarMonomial k = key;
    for (auto& [atom, mult] : k.phases) mult = -mult;
    out.add_term(k, key.imaginary ? Rational(-coeff) : coeff);
  }
  return out;
}

Scalar Scalar::substitute_one(std::string_view name) const {
  if (!contains_symbol(name)) return *this;
  Scalar out;
  for (const auto& [key, coeff] : terms_) {
    ScalarMonomial k = key;
    std::erase_if(k.powers, [&](const auto& f) { return f.first.name == name; });
    out.add_term(k, coeff);
  }
  return out;
}

Scalar scalar_conjugate(const Scalar& s) { return s.conjugate(); }

}  // namespace bolano
