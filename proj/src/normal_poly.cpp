#include "bolano/normal_poly.hpp"

#include <algorithm>

#include "bolano/errors.hpp"

namespace bolano {

NormalSignature::NormalSignature(std::vector<ModePowers> entries) {
  std::erase_if(entries, [](const ModePowers& e) { return e.p == 0 && e.q == 0; });
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].mode == entries[i - 1].mode) {
      throw InvariantViolation("duplicate mode '" + entries[i].mode.label +
                               "' in signature");
    }
  }
  entries_ = std::move(entries);
}

NormalSignature NormalSignature::single(ModeLabel mode, unsigned p, unsigned q) {
  NormalSignature sig;
  if (p != 0 || q != 0) sig.entries_.push_back({std::move(mode), p, q});
  return sig;
}

unsigned NormalSignature::degree() const {
  unsigned d = 0;
  for (const auto& e : entries_) d += e.p + e.q;
  return d;
}

ModePowers NormalSignature::powers(const ModeLabel& mode) const {
  for (const auto& e : entries_) {
    if (e.mode == mode) return e;
  }
  return {mode, 0, 0};
}

NormalSignature NormalSignature::dagger() const {
  NormalSignature out = *this;
  for (auto& e : out.entries_) std::swap(e.p, e.q);
  return out;
}

Word NormalSignature::to_word() const {
  Word w;
  for (const auto& e : entries_) {
    w.push_back(LadderOp::create(e.mode), e.p);
    w.push_back(LadderOp::annihilate(e.mode), e.q);
  }
  return w;
}

NormalPoly::NormalPoly(const Scalar& scalar) { add(NormalSignature{}, scalar); }

Scalar NormalPoly::coeff(const NormalSignature& sig) const {
  auto it = entries_.find(sig);
  return it == entries_.end() ? Scalar{} : it->second;
}

void NormalPoly::add(const NormalSignature& sig, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(sig, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void NormalPoly::add(NormalSignature&& sig, Scalar&& coeff) {
  if (coeff.is_zero()) return;
  auto it = entries_.lower_bound(sig);
  if (it == entries_.end() || it->first != sig) {
    entries_.emplace_hint(it, std::move(sig), std::move(coeff));
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) entries_.erase(it);
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& other) {
  for (const auto& [sig, c] : other.entries_) add(sig, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& other) {
  for (const auto& [sig, c] : other.entries_) add(sig, -c);
  return *this;
}

NormalPoly NormalPoly::operator-() const {
  NormalPoly out;
  for (const auto& [sig, c] : entries_) out.entries_.emplace(sig, -c);
  return out;
}

NormalPoly operator*(const Scalar& s, const NormalPoly& p) {
  NormalPoly out;
  if (s.is_zero()) return out;
  for (const auto& [sig, c] : p.entries_) out.add(sig, s * c);
  return out;
}

LadderPoly NormalPoly::to_ladder() const {
  LadderPoly out;
  for (const auto& [sig, c] : entries_) out.add_term(sig.to_word(), c);
  return out;
}

NormalPoly NormalPoly::substitute_one(std::string_view symbol) const {
  NormalPoly out;
  for (const auto& [sig, c] : entries_) out.add(sig, c.substitute_one(symbol));
  return out;
}

unsigned NormalPoly::degree() const {
  unsigned d = 0;
  for (const auto& [sig, c] : entries_) d = std::max(d, sig.degree());
  return d;
}

}  // namespace bolano
