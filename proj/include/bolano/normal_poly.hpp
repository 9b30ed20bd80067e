#pragma once

#include <compare>
#include <map>
#include <vector>

#include "bolano/ladder.hpp"

namespace bolano {

/// b†^p b^q for one mode.
struct ModePowers {
  ModeLabel mode;
  unsigned p = 0;
  unsigned q = 0;

  friend bool operator==(const ModePowers&, const ModePowers&) = default;
  friend std::strong_ordering operator<=>(const ModePowers&,
                                          const ModePowers&) = default;
};

/// A normal-ordered monomial prod_modes b†^p b^q with modes in ModeLabel
/// order. (0,0) entries are never stored, so the empty signature is 1.
/// Ordering is lexicographic over (mode, p, q) entries.
class NormalSignature {
 public:
  NormalSignature() = default;
  /// Entries may arrive in any mode order; duplicates are rejected.
  explicit NormalSignature(std::vector<ModePowers> entries);

  static NormalSignature single(ModeLabel mode, unsigned p, unsigned q);

  const std::vector<ModePowers>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  unsigned degree() const;
  /// Powers of the given mode, (0,0) if absent.
  ModePowers powers(const ModeLabel& mode) const;
  /// Swaps p and q in every mode.
  NormalSignature dagger() const;
  /// Normal-ordered word: every mode's creations, then its annihilations,
  /// modes in label order.
  Word to_word() const;

  friend bool operator==(const NormalSignature&, const NormalSignature&) = default;
  friend std::strong_ordering operator<=>(const NormalSignature&,
                                          const NormalSignature&) = default;

 private:
  std::vector<ModePowers> entries_;
};

/// Canonical normal-ordered polynomial: signature -> nonzero coefficient.
/// Structural equality is operator equality.
class NormalPoly {
 public:
  using Entries = std::map<NormalSignature, Scalar>;

  NormalPoly() = default;
  NormalPoly(const Scalar& scalar);  // NOLINT(google-explicit-constructor)

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Coefficient of a signature (zero if absent).
  Scalar coeff(const NormalSignature& sig) const;

  void add(const NormalSignature& sig, const Scalar& coeff);
  void add(NormalSignature&& sig, Scalar&& coeff);

  NormalPoly& operator+=(const NormalPoly& other);
  NormalPoly& operator-=(const NormalPoly& other);
  NormalPoly operator-() const;
  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(const Scalar& s, const NormalPoly& p);
  friend bool operator==(const NormalPoly&, const NormalPoly&) = default;

  LadderPoly to_ladder() const;
  NormalPoly substitute_one(std::string_view symbol) const;
  /// Largest signature degree.
  unsigned degree() const;

 private:
  Entries entries_;
};

}  // namespace bolano
