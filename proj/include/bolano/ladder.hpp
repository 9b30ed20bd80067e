#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bolano/scalar.hpp"

namespace bolano {

/// Subsystem label. The empty label is the unsubscripted mode and sorts
/// before every other label; the rest compare by code point.
struct ModeLabel {
  std::string label;

  ModeLabel() = default;
  explicit ModeLabel(std::string l) : label(std::move(l)) {}
  explicit ModeLabel(const char* l) : label(l) {}

  bool empty() const { return label.empty(); }

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
  friend std::strong_ordering operator<=>(const ModeLabel& a,
                                          const ModeLabel& b) {
    return a.label <=> b.label;
  }
};

enum class OpKind : std::uint8_t { Annihilate, Create };

struct LadderOp {
  OpKind kind = OpKind::Annihilate;
  ModeLabel mode;

  static LadderOp annihilate(ModeLabel mode) {
    return {OpKind::Annihilate, std::move(mode)};
  }
  static LadderOp create(ModeLabel mode) {
    return {OpKind::Create, std::move(mode)};
  }
  LadderOp dagger() const {
    return {kind == OpKind::Create ? OpKind::Annihilate : OpKind::Create, mode};
  }

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
  friend std::strong_ordering operator<=>(const LadderOp&,
                                          const LadderOp&) = default;
};

struct WordFactor {
  LadderOp op;
  unsigned exponent = 1;

  friend bool operator==(const WordFactor&, const WordFactor&) = default;
  friend std::strong_ordering operator<=>(const WordFactor&,
                                          const WordFactor&) = default;
};

/// Ordered product of ladder-operator powers. Exponents are positive and
/// adjacent factors never share an operator.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<WordFactor>& factors);

  static Word of(const LadderOp& op, unsigned exponent = 1);

  const std::vector<WordFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  unsigned degree() const;

  /// Appends op^exponent on the right, merging with the last factor.
  void push_back(const LadderOp& op, unsigned exponent = 1);
  Word concat(const Word& right) const;
  /// Reversed word with every operator daggered.
  Word dagger() const;
  /// One entry per operator, exponents expanded.
  std::vector<LadderOp> flatten() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<WordFactor> factors_;
};

struct LadderTerm {
  Scalar coeff;
  Word word;
};

/// Sum of LadderTerms keyed by word; terms with equal words are merged and
/// zero terms are dropped.
class LadderPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  LadderPoly() = default;
  LadderPoly(const Scalar& scalar);  // NOLINT(google-explicit-constructor)
  LadderPoly(const LadderOp& op);    // NOLINT(google-explicit-constructor)
  explicit LadderPoly(const LadderTerm& term);

  static LadderPoly annihilate(std::string mode = {});
  static LadderPoly create(std::string mode = {});

  const Terms& terms() const { return terms_; }
  std::vector<LadderTerm> term_list() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// True if no term contains a ladder operator.
  bool is_scalar() const;
  /// The scalar value, if is_scalar().
  Scalar scalar_part() const;

  void add_term(const Word& word, const Scalar& coeff);

  LadderPoly& operator+=(const LadderPoly& other);
  LadderPoly& operator-=(const LadderPoly& other);
  LadderPoly operator-() const;
  friend LadderPoly operator+(LadderPoly a, const LadderPoly& b) { return a += b; }
  friend LadderPoly operator-(LadderPoly a, const LadderPoly& b) { return a -= b; }
  friend LadderPoly operator*(const LadderPoly& a, const LadderPoly& b);
  friend LadderPoly operator*(const Scalar& s, const LadderPoly& p);
  friend bool operator==(const LadderPoly&, const LadderPoly&) = default;

  LadderPoly pow(unsigned exponent) const;
  LadderPoly substitute_one(std::string_view symbol) const;

 private:
  Terms terms_;
};

/// Hermitian conjugate: coefficients conjugated, words reversed with
/// creation and annihilation swapped.
LadderPoly dagger(const LadderPoly& p);

}  // namespace bolano
