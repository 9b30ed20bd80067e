#include "bolano/normord.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

long long parse_env_int(const char* name, const char* text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || text[used] != '\0') {
    throw std::invalid_argument(std::string(name) + " must be an integer, got '" +
                                text + "'");
  }
  return value;
}

NormalPoly multiply_disjoint(const NormalPoly& a, const NormalPoly& b) {
  NormalPoly out;
  for (const auto& [sa, ca] : a.entries()) {
    for (const auto& [sb, cb] : b.entries()) {
      std::vector<ModePowers> entries = sa.entries();
      entries.insert(entries.end(), sb.entries().begin(), sb.entries().end());
      out.add(NormalSignature(std::move(entries)), ca * cb);
    }
  }
  return out;
}

}  // namespace

bool ParallelConfig::runs_parallel(std::size_t summands) const {
  return enable && workers > 1 &&
         summands >= static_cast<std::size_t>(effective_min_summands());
}

unsigned ParallelConfig::default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

ParallelConfig ParallelConfig::from_env() {
  ParallelConfig cfg;
  if (const char* v = std::getenv("BOLANO_WORKERS")) {
    const long long n = parse_env_int("BOLANO_WORKERS", v);
    if (n < 1) throw std::invalid_argument("BOLANO_WORKERS must be positive");
    cfg.workers = static_cast<unsigned>(n);
  }
  if (const char* v = std::getenv("BOLANO_MIN_SUMMANDS")) {
    cfg.min_summands = static_cast<int>(parse_env_int("BOLANO_MIN_SUMMANDS", v));
  }
  if (const char* v = std::getenv("BOLANO_PARALLEL")) {
    const std::string s(v);
    if (s != "0" && s != "1") {
      throw std::invalid_argument("BOLANO_PARALLEL must be 0 or 1");
    }
    cfg.enable = s == "1";
  }
  return cfg;
}

ModeFactorization factor_by_mode(const LadderTerm& term) {
  ModeFactorization out{term.coeff, {}};
  for (const auto& f : term.word.factors()) {
    out.words[f.op.mode].push_back(f.op, f.exponent);
  }
  return out;
}

NormalPoly final_sort(
    const std::vector<std::pair<ModeLabel, std::vector<ModeTerm>>>& factors,
    const Scalar& scalar) {
  NormalPoly out;
  if (scalar.is_zero()) return out;
  for (const auto& [mode, terms] : factors) {
    if (terms.empty()) return out;
  }
  // Odometer over one term per mode; entries come out in mode order because
  // the factors are listed in mode order.
  // A single-term scalar with an integer coefficient (the common case) is
  // rebuilt directly instead of going through rational multiplication.
  const ScalarMonomial* key = nullptr;
  BigInt integer_coeff;
  if (scalar.is_monomial()) {
    const auto& [k, c] = *scalar.terms().begin();
    if (boost::multiprecision::denominator(c) == 1) {
      key = &k;
      integer_coeff = boost::multiprecision::numerator(c);
    }
  }
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<ModePowers> entries;
    entries.reserve(factors.size());
    BigInt coeff = 1;
    for (std::size_t m = 0; m < factors.size(); ++m) {
      const ModeTerm& t = factors[m].second[pick[m]];
      coeff *= t.coeff;
      entries.push_back({factors[m].first, t.p, t.q});
    }
    NormalSignature sig(std::move(entries));
    if (key) {
      coeff *= integer_coeff;
      out.add(std::move(sig), Scalar::from_term(*key, Rational(coeff)));
    } else {
      out.add(std::move(sig), scalar.scaled(Rational(coeff)));
    }
    std::size_t m = 0;
    for (; m < factors.size(); ++m) {
      if (++pick[m] < factors[m].second.size()) break;
      pick[m] = 0;
    }
    if (m == factors.size()) break;
  }
  return out;
}

NormalPoly final_sort(const std::vector<NormalPoly>& factors, const Scalar& scalar) {
  NormalPoly out(scalar);
  for (const auto& f : factors) out = multiply_disjoint(out, f);
  return out;
}

NormalPoly normal_order_term(const LadderTerm& term, StirlingCache* cache) {
  const auto& factors = term.word.factors();
  if (factors.empty()) return NormalPoly(term.coeff);
  std::vector<const ModeLabel*> modes;
  for (const auto& f : factors) {
    if (std::none_of(modes.begin(), modes.end(), [&](const ModeLabel* m) { return *m == f.op.mode; })) {
      modes.push_back(&f.op.mode);
    }
  }
  std::sort(modes.begin(), modes.end(), [](const ModeLabel* a, const ModeLabel* b) { return *a < *b; });
  std::vector<std::pair<ModeLabel, std::vector<ModeTerm>>> per_mode;
  per_mode.reserve(modes.size());
  for (const ModeLabel* mode : modes) {
    per_mode.emplace_back(*mode, blasiak_terms(WordProfile::from_word(term.word, *mode), cache));
  }
  return final_sort(per_mode, term.coeff);
}

NormalPoly normal_order(const LadderPoly& p, const ParallelConfig& cfg) {
  if (!cfg.runs_parallel(p.size())) {
    if (p.size() == 1) {
      const auto& [word, coeff] = *p.terms().begin();
      return normal_order_term(LadderTerm{coeff, word});
    }
    NormalPoly out;
    StirlingCache cache;
    for (const auto& [word, coeff] : p.terms()) {
      out += normal_order_term(LadderTerm{coeff, word}, &cache);
    }
    return out;
  }

  const std::vector<LadderTerm> terms = p.term_list();
  const std::size_t n_workers = std::min<std::size_t>(cfg.workers, terms.size());
  std::vector<NormalPoly> partial(n_workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w] {
        StirlingCache cache;
        try {
          for (std::size_t i = next++; i < terms.size(); i = next++) {
            partial[w] += normal_order_term(terms[i], &cache);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = terms.size();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  NormalPoly out;
  for (const auto& part : partial) out += part;
  return out;
}

NormalPoly commutator_no(const LadderPoly& a, const LadderPoly& b,
                         const ParallelConfig& cfg) {
  return normal_order(a * b - b * a, cfg);
}

}  // namespace bolano
