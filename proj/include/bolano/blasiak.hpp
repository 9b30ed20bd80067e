#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "bolano/normal_poly.hpp"
#include "bolano/rational.hpp"

namespace bolano {

/// Single-mode word b†^{r_M} b^{s_M} ... b†^{r_1} b^{s_1}, blocks indexed from
/// the right. excess[l-1] = sum_{m<=l} (r_m - s_m).
class WordProfile {
 public:
  /// r and s listed from block 1 (rightmost) to block M.
  WordProfile(std::vector<unsigned> r, std::vector<unsigned> s);

  /// Profile of a word whose operators all act on one mode, using the
  /// fewest blocks. Throws InvariantViolation for an empty or multi-mode word.
  static WordProfile from_word(const Word& word);
  /// Profile of the subword formed by the operators of one mode.
  static WordProfile from_word(const Word& word, const ModeLabel& mode);

  const std::vector<unsigned>& r() const { return r_; }
  const std::vector<unsigned>& s() const { return s_; }
  std::size_t blocks() const { return r_.size(); }
  /// d_1 .. d_M.
  const std::vector<long long>& excess() const { return d_; }
  long long final_excess() const { return d_.back(); }
  unsigned total_creations() const;
  unsigned total_annihilations() const;

  /// Profile of the adjoint word: r' = reverse(s), s' = reverse(r).
  WordProfile adjoint() const;
  /// Rebuilds the single-mode word on the given mode.
  Word to_word(const ModeLabel& mode) const;

  friend bool operator==(const WordProfile& a, const WordProfile& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }

 private:
  std::vector<unsigned> r_;
  std::vector<unsigned> s_;
  std::vector<long long> d_;
};

BigInt binomial(unsigned n, unsigned k);
/// (m)_n = m (m-1) ... (m-n+1); (m)_0 = 1.
BigInt falling_factorial(long long m, unsigned n);

/// Generalized Stirling number S_{r,s}(k) of the profile. The alternating
/// sum is divided by k! exactly once; a nonzero remainder throws
/// InvariantViolation.
BigInt stirling_rs(const WordProfile& profile, unsigned k);

/// One term coeff * b†^p b^q of a single-mode normal-ordered series.
struct ModeTerm {
  unsigned p = 0;
  unsigned q = 0;
  BigInt coeff;
};

/// Per-invocation memo of Blasiak expansions keyed by profile.
class StirlingCache {
 public:
  const std::vector<ModeTerm>* find(const WordProfile& profile) const;
  const std::vector<ModeTerm>& store(const WordProfile& profile,
                                     std::vector<ModeTerm> terms);

 private:
  using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
  std::map<Key, std::vector<ModeTerm>> memo_;
};

/// Normal-ordered expansion of a single-mode word, terms in increasing k.
/// Coefficients are positive integers and every term has p - q equal to the
/// word's final excess.
std::vector<ModeTerm> blasiak_terms(const WordProfile& profile,
                                    StirlingCache* cache = nullptr);

/// Same expansion as a NormalPoly on the given mode.
NormalPoly blasiak_normal_order(const WordProfile& profile,
                                const ModeLabel& mode = ModeLabel{});

}  // namespace bolano
