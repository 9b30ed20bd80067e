#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bolano/ladder.hpp"

namespace bolano {

/// SplitMix64 (Steele, Lea, Flood 2014). Every trial draws from its own
/// stream, split off the seed by trial index, so workloads are reproducible
/// bit-for-bit from (seed, trial, n_ops, n_modes).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Independent generator for sub-stream `index`.
  SplitMix64 split(std::uint64_t index) const;

 private:
  std::uint64_t state_;
};

/// Uniform i.i.d. word over the 2 * n_modes operator kinds (b_k, bd_k) with
/// modes labelled "1".."n_modes".
Word random_word(SplitMix64& rng, unsigned n_ops, unsigned n_modes);

enum class BenchAlgo { Blasiak, Baseline, Both };

struct BenchOptions {
  unsigned n_ops = 10;
  unsigned n_modes = 2;
  unsigned trials = 1000;
  std::uint64_t seed = 0;
  BenchAlgo algo = BenchAlgo::Both;
  /// Each timing is the minimum over this many runs.
  unsigned repeat = 1;
};

struct BenchRecord {
  std::uint64_t seed = 0;
  unsigned trial = 0;
  unsigned n_ops = 0;
  unsigned n_modes = 0;
  std::string algo;
  std::chrono::nanoseconds wall_time{0};
  std::size_t term_count = 0;
};

struct BenchSummary {
  std::vector<BenchRecord> records;
  /// baseline / blasiak time per trial; empty unless algo is Both.
  std::vector<double> ratios;
  double median_ratio = 0;
  double mean_ratio = 0;
};

/// Workload of trial `trial` for the given options.
Word bench_word(const BenchOptions& opts, unsigned trial);

/// Runs the benchmark serially. Only the normal-ordering call is timed. In
/// Both mode the two outputs are compared every trial and a mismatch throws
/// InvariantViolation.
BenchSummary run_bench(const BenchOptions& opts);

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

double median(std::vector<double> values);

}  // namespace bolano
