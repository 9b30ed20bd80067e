#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bolano/ladder.hpp"
#include "bolano/normal_poly.hpp"
#include "bolano/parser.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline bolano::ModeLabel mode(unsigned k) { return bolano::ModeLabel(std::to_string(k)); }

/// Word of exactly n_ops operators over modes "1".."n_modes".
inline bolano::Word random_word(Rng& rng, unsigned n_ops, unsigned n_modes) {
  bolano::Word w;
  for (unsigned i = 0; i < n_ops; ++i) {
    const auto m = mode(uniform(rng, 1, n_modes));
    w.push_back(uniform(rng, 0, 1) ? bolano::LadderOp::create(m)
                                   : bolano::LadderOp::annihilate(m));
  }
  return w;
}

inline bolano::LadderPoly monomial(const bolano::Word& w, const bolano::Scalar& c = 1) {
  return bolano::LadderPoly(bolano::LadderTerm{c, w});
}

inline bolano::Rational random_rational(Rng& rng) {
  const int num = static_cast<int>(uniform(rng, 0, 12)) - 6;
  const int den = static_cast<int>(uniform(rng, 1, 4));
  return bolano::Rational(num == 0 ? 1 : num, den);
}

/// Small random coefficient: rational times optional I, x, y.
inline bolano::Scalar random_scalar(Rng& rng, bool symbols = true) {
  bolano::Scalar s(random_rational(rng));
  if (uniform(rng, 0, 3) == 0) s *= bolano::Scalar::imaginary_unit();
  if (symbols) {
    if (uniform(rng, 0, 2) == 0) s *= bolano::Scalar::symbol("x", uniform(rng, 1, 2));
    if (uniform(rng, 0, 3) == 0) s *= bolano::Scalar::symbol("y");
  }
  return s;
}

inline bolano::LadderPoly random_poly(Rng& rng, unsigned terms, unsigned max_ops,
                                      unsigned n_modes, bool symbols = true) {
  bolano::LadderPoly p;
  for (unsigned t = 0; t < terms; ++t) {
    p += monomial(random_word(rng, uniform(rng, 0, max_ops), n_modes),
                  random_scalar(rng, symbols));
  }
  return p;
}

inline bolano::NormalPoly random_normal_poly(Rng& rng, unsigned terms, unsigned max_power,
                                             unsigned n_modes) {
  bolano::NormalPoly n;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<bolano::ModePowers> entries;
    for (unsigned k = 1; k <= n_modes; ++k) {
      if (uniform(rng, 0, 1)) {
        entries.push_back({mode(k), uniform(rng, 0, max_power), uniform(rng, 0, max_power)});
      }
    }
    std::erase_if(entries, [](const auto& e) { return e.p == 0 && e.q == 0; });
    n.add(bolano::NormalSignature(entries), random_scalar(rng));
  }
  return n;
}

inline bolano::LadderPoly P(const char* text) { return bolano::parse_poly(text); }

}  // namespace testing
