#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bolano/ladder.hpp"
#include "bolano/normal_poly.hpp"

namespace bolano {

/// Baseline normal ordering by recursive rewriting: the leftmost adjacent
/// pair b_j b†_k becomes b†_k b_j + delta_jk, recursing on every produced
/// term until no such pair remains.
NormalPoly flatten_and_swap_no(const LadderPoly& p);

/// x + i y with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Exact values for the symbols of a scalar. `symbols` maps a symbol name to
/// its value; `phases` maps a symbol theta to the value of exp(i theta).
/// Fractional symbol powers need a real nonnegative value with an exact
/// root; phase multipliers must be integers.
struct Substitution {
  std::map<std::string, GaussianRational> symbols;
  std::map<std::string, GaussianRational> phases;
};

/// Evaluates a scalar under a substitution. Throws MissingSubstitution for
/// an unsubstituted symbol and UnsupportedScalarPower when the value is not
/// an exact Gaussian rational.
GaussianRational evaluate(const Scalar& s, const Substitution& subs);

/// Occupation numbers, one per basis mode.
using FockState = std::vector<unsigned>;

/// Truncated Fock-space matrix over |n_1 ... n_m>, 0 <= n_k < dim.
///
/// Matrix elements of ladder monomials are square roots of integers. Every
/// stored entry is the reduced element <n'|X|n> / sqrt(prod_k n_k! n'_k!),
/// which is an exact Gaussian rational for any polynomial X. Only nonzero
/// entries are stored.
class FockMatrix {
 public:
  FockMatrix(std::vector<ModeLabel> modes, unsigned dim);

  const std::vector<ModeLabel>& modes() const { return modes_; }
  unsigned dim() const { return dim_; }
  std::size_t basis_size() const;

  /// Reduced element <row|X|col>/sqrt(prod n! n'!).
  GaussianRational reduced(const FockState& row, const FockState& col) const;
  /// Real matrix element squared, |<row|X|col>|^2, as an exact rational.
  Rational squared_magnitude(const FockState& row, const FockState& col) const;

  void accumulate(const FockState& row, const FockState& col,
                  const GaussianRational& value);

  /// Equality restricted to rows and columns whose occupations are all
  /// below dim - margin. The truncation only corrupts the excluded region
  /// when margin is at least the total degree of the operators compared.
  bool block_equal(const FockMatrix& other, unsigned margin) const;

  const std::map<std::pair<std::size_t, std::size_t>, GaussianRational>& entries() const {
    return entries_;
  }
  std::size_t index_of(const FockState& state) const;
  FockState state_of(std::size_t index) const;

 private:
  std::vector<ModeLabel> modes_;
  unsigned dim_;
  std::map<std::pair<std::size_t, std::size_t>, GaussianRational> entries_;
};

/// Matrix of a polynomial on the given modes (which must include every mode
/// the polynomial uses).
FockMatrix fock_matrix(const LadderPoly& p, const std::vector<ModeLabel>& modes,
                       unsigned dim, const Substitution& subs = {});
FockMatrix fock_matrix(const NormalPoly& p, const std::vector<ModeLabel>& modes,
                       unsigned dim, const Substitution& subs = {});

/// Sorted set of modes used by a polynomial.
std::vector<ModeLabel> modes_of(const LadderPoly& p);

}  // namespace bolano
