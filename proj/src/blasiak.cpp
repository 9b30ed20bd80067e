#include "bolano/blasiak.hpp"

#include <cstdint>
#include <numeric>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

// prod_m (d_{m-1} + j)_{s_m} with d_0 = 0.
BigInt block_product(const WordProfile& profile, unsigned j) {
  BigInt out = 1;
  long long previous_excess = 0;
  for (std::size_t m = 0; m < profile.blocks(); ++m) {
    out *= falling_factorial(previous_excess + j, profile.s()[m]);
    if (out == 0) return out;
    previous_excess = profile.excess()[m];
  }
  return out;
}

BigInt divide_by_factorial(const BigInt& sum, unsigned k) {
  const BigInt f = factorial(k);
  if (sum % f != 0) {
    throw InvariantViolation("generalized Stirling sum not divisible by " +
                             std::to_string(k) + "!");
  }
  return sum / f;
}

using Wide = __int128;

bool mul_into(Wide& acc, Wide factor) { return !__builtin_mul_overflow(acc, factor, &acc); }
bool add_into(Wide& acc, Wide term) { return !__builtin_add_overflow(acc, term, &acc); }

BigInt to_bigint(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-out) : out;
}

// Same sums as the BigInt branch below in 128-bit arithmetic. Returns false
// as soon as anything would overflow.
bool nonnegative_branch_fast(const WordProfile& profile, std::vector<ModeTerm>& out) {
  const long long excess = profile.final_excess();
  const unsigned k_min = profile.s().front();
  const unsigned k_max = profile.total_annihilations();
  const auto& s = profile.s();
  const auto& d = profile.excess();

  std::vector<Wide> products(k_max + 1);
  for (unsigned j = 0; j <= k_max; ++j) {
    Wide acc = 1;
    long long previous_excess = 0;
    for (std::size_t m = 0; m < s.size() && acc != 0; ++m) {
      for (unsigned i = 0; i < s[m]; ++i) {
        const long long factor = previous_excess + j - i;
        if (factor == 0) {
          acc = 0;
          break;
        }
        if (!mul_into(acc, factor)) return false;
      }
      previous_excess = d[m];
    }
    products[j] = acc;
  }

  std::vector<Wide> row(k_max + 1, 0);
  row[0] = 1;
  Wide factorial = 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > 0) {
      if (!mul_into(factorial, k)) return false;
      for (unsigned j = k; j > 0; --j) {
        if (!add_into(row[j], row[j - 1])) return false;
      }
    }
    if (k < k_min) continue;
    Wide sum = 0;
    for (unsigned j = 0; j <= k; ++j) {
      Wide term = row[j];
      if (!mul_into(term, products[j])) return false;
      if ((k - j) % 2) term = -term;
      if (!add_into(sum, term)) return false;
    }
    if (sum % factorial != 0) {
      throw InvariantViolation("generalized Stirling sum not divisible by " +
                               std::to_string(k) + "!");
    }
    const Wide value = sum / factorial;
    if (value != 0) {
      out.push_back({static_cast<unsigned>(k + excess), k, to_bigint(value)});
    }
  }
  return true;
}

// Expansion for a profile with nonnegative final excess.
std::vector<ModeTerm> nonnegative_branch(const WordProfile& profile) {
  {
    std::vector<ModeTerm> fast;
    if (nonnegative_branch_fast(profile, fast)) return fast;
  }
  const long long excess = profile.final_excess();
  const unsigned k_min = profile.s().front();
  const unsigned k_max = profile.total_annihilations();

  std::vector<BigInt> products(k_max + 1);
  for (unsigned j = 0; j <= k_max; ++j) products[j] = block_product(profile, j);

  std::vector<ModeTerm> out;
  out.reserve(k_max - k_min + 1);
  std::vector<BigInt> row{1};  // binomial row C(k, .)
  for (unsigned k = 0; k <= k_max; ++k) {
    if (k > 0) {
      std::vector<BigInt> next(k + 1);
      next[0] = next[k] = 1;
      for (unsigned j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    if (k < k_min) continue;
    BigInt sum = 0;
    for (unsigned j = 0; j <= k; ++j) {
      if ((k - j) % 2 == 0) {
        sum += row[j] * products[j];
      } else {
        sum -= row[j] * products[j];
      }
    }
    BigInt value = divide_by_factorial(sum, k);
    if (value != 0) {
      out.push_back({static_cast<unsigned>(k + excess), k, std::move(value)});
    }
  }
  return out;
}

}  // namespace

WordProfile::WordProfile(std::vector<unsigned> r, std::vector<unsigned> s)
    : r_(std::move(r)), s_(std::move(s)) {
  if (r_.empty() || r_.size() != s_.size()) {
    throw InvariantViolation("word profile needs M >= 1 blocks with |r| = |s|");
  }
  d_.reserve(r_.size());
  long long running = 0;
  for (std::size_t m = 0; m < r_.size(); ++m) {
    running += static_cast<long long>(r_[m]) - static_cast<long long>(s_[m]);
    d_.push_back(running);
  }
}

WordProfile WordProfile::from_word(const Word& word) {
  const auto& f = word.factors();
  if (f.empty()) throw InvariantViolation("empty word has no profile");
  for (const auto& factor : f) {
    if (factor.op.mode != f.front().op.mode) {
      throw InvariantViolation("word profile requires a single-mode word");
    }
  }
  return from_word(word, f.front().op.mode);
}

WordProfile WordProfile::from_word(const Word& word, const ModeLabel& mode) {
  std::vector<unsigned> r;
  std::vector<unsigned> s;
  unsigned rm = 0;
  unsigned sm = 0;
  bool seen = false;
  const auto& f = word.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (it->op.mode != mode) continue;
    seen = true;
    if (it->op.kind == OpKind::Annihilate) {
      if (rm > 0) {
        r.push_back(rm);
        s.push_back(sm);
        rm = sm = 0;
      }
      sm += it->exponent;
    } else {
      rm += it->exponent;
    }
  }
  if (!seen) throw InvariantViolation("mode '" + mode.label + "' does not occur in the word");
  r.push_back(rm);
  s.push_back(sm);
  return WordProfile(std::move(r), std::move(s));
}

unsigned WordProfile::total_creations() const {
  return std::accumulate(r_.begin(), r_.end(), 0U);
}

unsigned WordProfile::total_annihilations() const {
  return std::accumulate(s_.begin(), s_.end(), 0U);
}

WordProfile WordProfile::adjoint() const {
  return WordProfile(std::vector<unsigned>(s_.rbegin(), s_.rend()),
                     std::vector<unsigned>(r_.rbegin(), r_.rend()));
}

Word WordProfile::to_word(const ModeLabel& mode) const {
  Word w;
  for (std::size_t m = r_.size(); m-- > 0;) {
    w.push_back(LadderOp::create(mode), r_[m]);
    w.push_back(LadderOp::annihilate(mode), s_[m]);
  }
  return w;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt falling_factorial(long long m, unsigned n) {
  BigInt out = 1;
  for (unsigned i = 0; i < n; ++i) {
    const long long factor = m - static_cast<long long>(i);
    if (factor == 0) return 0;
    out *= factor;
  }
  return out;
}

BigInt stirling_rs(const WordProfile& profile, unsigned k) {
  BigInt sum = 0;
  for (unsigned j = 0; j <= k; ++j) {
    BigInt term = binomial(k, j) * block_product(profile, j);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return divide_by_factorial(sum, k);
}

const std::vector<ModeTerm>* StirlingCache::find(const WordProfile& profile) const {
  auto it = memo_.find(Key{profile.r(), profile.s()});
  return it == memo_.end() ? nullptr : &it->second;
}

const std::vector<ModeTerm>& StirlingCache::store(const WordProfile& profile,
                                                  std::vector<ModeTerm> terms) {
  return memo_.insert_or_assign(Key{profile.r(), profile.s()}, std::move(terms))
      .first->second;
}

std::vector<ModeTerm> blasiak_terms(const WordProfile& profile,
                                    StirlingCache* cache) {
  if (cache) {
    if (const auto* hit = cache->find(profile)) return *hit;
  }
  std::vector<ModeTerm> out;
  if (profile.final_excess() >= 0) {
    out = nonnegative_branch(profile);
  } else {
    // N(X) = N(X†)†, and X† has positive excess.
    out = nonnegative_branch(profile.adjoint());
    for (auto& t : out) std::swap(t.p, t.q);
  }
  if (cache) cache->store(profile, out);
  return out;
}

NormalPoly blasiak_normal_order(const WordProfile& profile, const ModeLabel& mode) {
  NormalPoly out;
  for (const auto& t : blasiak_terms(profile)) {
    out.add(NormalSignature::single(mode, t.p, t.q), Scalar(Rational(t.coeff)));
  }
  return out;
}

}  // namespace bolano
