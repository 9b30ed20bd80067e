#include "bolano/bench.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>

#include "bolano/errors.hpp"
#include "bolano/normord.hpp"
#include "bolano/oracle.hpp"

namespace bolano {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::split(std::uint64_t index) const {
  SplitMix64 mixer(state_ ^ (index * 0xd1b54a32d192ed03ULL));
  return SplitMix64(mixer.next());
}

Word random_word(SplitMix64& rng, unsigned n_ops, unsigned n_modes) {
  Word w;
  for (unsigned i = 0; i < n_ops; ++i) {
    const std::uint64_t pick = rng.next() % (2ULL * n_modes);
    const ModeLabel mode(std::to_string(pick / 2 + 1));
    w.push_back(pick % 2 ? LadderOp::create(mode) : LadderOp::annihilate(mode));
  }
  return w;
}

Word bench_word(const BenchOptions& opts, unsigned trial) {
  SplitMix64 rng = SplitMix64(opts.seed).split(trial);
  return random_word(rng, opts.n_ops, opts.n_modes);
}

namespace {

template <class F>
std::pair<std::chrono::nanoseconds, NormalPoly> timed(F&& f, unsigned repeat) {
  using clock = std::chrono::steady_clock;
  std::chrono::nanoseconds best = std::chrono::nanoseconds::max();
  NormalPoly out;
  for (unsigned i = 0; i < std::max(1u, repeat); ++i) {
    const auto start = clock::now();
    NormalPoly result = f();
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    best = std::min(best, std::max(elapsed, std::chrono::nanoseconds(1)));
    out = std::move(result);
  }
  return {best, std::move(out)};
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2;
}

BenchSummary run_bench(const BenchOptions& opts) {
  BenchSummary summary;
  const ParallelConfig cfg = ParallelConfig::serial();
  for (unsigned trial = 0; trial < opts.trials; ++trial) {
    const LadderPoly poly(LadderTerm{Scalar(1), bench_word(opts, trial)});
    auto record = [&](const char* algo, std::chrono::nanoseconds t, const NormalPoly& n) {
      summary.records.push_back(
          {opts.seed, trial, opts.n_ops, opts.n_modes, algo, t, n.size()});
    };
    std::optional<std::pair<std::chrono::nanoseconds, NormalPoly>> fast, slow;
    if (opts.algo != BenchAlgo::Baseline) {
      fast = timed([&] { return normal_order(poly, cfg); }, opts.repeat);
      record("blasiak", fast->first, fast->second);
    }
    if (opts.algo != BenchAlgo::Blasiak) {
      slow = timed([&] { return flatten_and_swap_no(poly); }, opts.repeat);
      record("baseline", slow->first, slow->second);
    }
    if (fast && slow) {
      if (fast->second != slow->second) {
        throw InvariantViolation("blasiak and baseline disagree on trial " +
                                 std::to_string(trial));
      }
      summary.ratios.push_back(static_cast<double>(slow->first.count()) /
                               static_cast<double>(fast->first.count()));
    }
  }
  if (!summary.ratios.empty()) {
    summary.median_ratio = median(summary.ratios);
    summary.mean_ratio = std::accumulate(summary.ratios.begin(), summary.ratios.end(), 0.0) /
                         static_cast<double>(summary.ratios.size());
  }
  return summary;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "seed,trial,n_ops,n_modes,algo,nanos,terms\n";
  for (const auto& r : records) {
    os << r.seed << ',' << r.trial << ',' << r.n_ops << ',' << r.n_modes << ',' << r.algo
       << ',' << r.wall_time.count() << ',' << r.term_count << '\n';
  }
}

}  // namespace bolano
