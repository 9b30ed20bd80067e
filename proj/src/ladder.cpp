#include "bolano/ladder.hpp"

#include <algorithm>

namespace bolano {

Word::Word(const std::vector<WordFactor>& factors) {
  for (const auto& f : factors) push_back(f.op, f.exponent);
}

Word Word::of(const LadderOp& op, unsigned exponent) {
  Word w;
  w.push_back(op, exponent);
  return w;
}

unsigned Word::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

void Word::push_back(const LadderOp& op, unsigned exponent) {
  if (exponent == 0) return;
  if (!factors_.empty() && factors_.back().op == op) {
    factors_.back().exponent += exponent;
  } else {
    factors_.push_back({op, exponent});
  }
}

Word Word::concat(const Word& right) const {
  Word out = *this;
  for (const auto& f : right.factors_) out.push_back(f.op, f.exponent);
  return out;
}

Word Word::dagger() const {
  Word out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    out.push_back(it->op.dagger(), it->exponent);
  }
  return out;
}

std::vector<LadderOp> Word::flatten() const {
  std::vector<LadderOp> ops;
  ops.reserve(degree());
  for (const auto& f : factors_) ops.insert(ops.end(), f.exponent, f.op);
  return ops;
}

LadderPoly::LadderPoly(const Scalar& scalar) { add_term(Word{}, scalar); }

LadderPoly::LadderPoly(const LadderOp& op) { add_term(Word::of(op), Scalar(1)); }

LadderPoly::LadderPoly(const LadderTerm& term) { add_term(term.word, term.coeff); }

LadderPoly LadderPoly::annihilate(std::string mode) {
  return LadderPoly(LadderOp::annihilate(ModeLabel(std::move(mode))));
}

LadderPoly LadderPoly::create(std::string mode) {
  return LadderPoly(LadderOp::create(ModeLabel(std::move(mode))));
}

std::vector<LadderTerm> LadderPoly::term_list() const {
  std::vector<LadderTerm> out;
  out.reserve(terms_.size());
  for (const auto& [word, coeff] : terms_) out.push_back({coeff, word});
  return out;
}

bool LadderPoly::is_scalar() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.empty(); });
}

Scalar LadderPoly::scalar_part() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar{} : it->second;
}

void LadderPoly::add_term(const Word& word, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LadderPoly& LadderPoly::operator+=(const LadderPoly& other) {
  for (const auto& [word, coeff] : other.terms_) add_term(word, coeff);
  return *this;
}

LadderPoly& LadderPoly::operator-=(const LadderPoly& other) {
  for (const auto& [word, coeff] : other.terms_) add_term(word, -coeff);
  return *this;
}

LadderPoly LadderPoly::operator-() const {
  LadderPoly out;
  for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, -coeff);
  return out;
}

LadderPoly operator*(const LadderPoly& a, const LadderPoly& b) {
  LadderPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa.concat(wb), ca * cb);
  }
  return out;
}

LadderPoly operator*(const Scalar& s, const LadderPoly& p) {
  LadderPoly out;
  if (s.is_zero()) return out;
  for (const auto& [word, coeff] : p.terms_) out.add_term(word, s * coeff);
  return out;
}

LadderPoly LadderPoly::pow(unsigned exponent) const {
  LadderPoly out(Scalar(1));
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

LadderPoly LadderPoly::substitute_one(std::string_view symbol) const {
  LadderPoly out;
  for (const auto& [word, coeff] : terms_) {
    out.add_term(word, coeff.substitute_one(symbol));
  }
  return out;
}

LadderPoly dagger(const LadderPoly& p) {
  LadderPoly out;
  for (const auto& [word, coeff] : p.terms()) {
    out.add_term(word.dagger(), coeff.conjugate());
  }
  return out;
}

}  // namespace bolano
