#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bolano/blasiak.hpp"
#include "bolano/ladder.hpp"
#include "bolano/normal_poly.hpp"

namespace bolano {

/// Multiprocessing knobs for normal_order. Work is split per summand.
struct ParallelConfig {
  bool enable = true;
  unsigned workers = default_workers();
  int min_summands = 2;

  /// min_summands clamped from below to 2.
  int effective_min_summands() const { return min_summands < 2 ? 2 : min_summands; }
  bool runs_parallel(std::size_t summands) const;

  static unsigned default_workers();
  /// Defaults overridden by BOLANO_WORKERS, BOLANO_MIN_SUMMANDS and
  /// BOLANO_PARALLEL. Malformed values throw std::invalid_argument.
  static ParallelConfig from_env();
  static ParallelConfig serial() { return {false, 1, 2}; }
};

/// A summand split into its scalar and one order-preserving subword per mode.
struct ModeFactorization {
  Scalar scalar;
  std::map<ModeLabel, Word> words;
};

ModeFactorization factor_by_mode(const LadderTerm& term);

/// Multiplies per-mode normal-ordered series (at most one per mode) and the
/// scalar into one canonical NormalPoly.
NormalPoly final_sort(const std::vector<std::pair<ModeLabel, std::vector<ModeTerm>>>& factors,
                      const Scalar& scalar);
NormalPoly final_sort(const std::vector<NormalPoly>& factors, const Scalar& scalar);

/// Normal order of a single summand.
NormalPoly normal_order_term(const LadderTerm& term, StirlingCache* cache = nullptr);

/// Normal order of an expanded polynomial. The result does not depend on
/// the worker count or scheduling.
NormalPoly normal_order(const LadderPoly& p, const ParallelConfig& cfg = {});

/// normal_order(A*B - B*A).
NormalPoly commutator_no(const LadderPoly& a, const LadderPoly& b,
                         const ParallelConfig& cfg = {});

}  // namespace bolano
