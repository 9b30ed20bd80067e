#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bolano/bench.hpp"
#include "bolano/cli.hpp"

using namespace bolano;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bolano");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("no") {
  CHECK(run({"no", "b*bd*b"}).out == "b_{} + {b^\\dagger_{}} b_{}^{2}\n");
  CHECK(run({"no", "5"}).out == "5\n");
  CHECK(run({"no", "b*bd", "--format", "plain"}).out == "1 + bd*b\n");
  CHECK(run({"no", "b*bd", "--workers", "3", "--min-summands", "1"}).code == 0);
  CHECK(run({"no", "b*bd", "--no-parallel"}).code == 0);
  const Run bad = run({"no", "b^x"});
  CHECK(bad.code == kExitUserError);
  CHECK(bad.err.find("NonIntegerLadderPower") != std::string::npos);
  CHECK(run({"no", "b +"}).code == kExitUserError);
  CHECK(run({"no", "b*"}).err ==
        "error: ParseError: expected operand at offset 2 (expected number identifier b bd I ()\n");
  CHECK(run({"no", "b", "--format", "html"}).code == kExitUserError);
  CHECK(run({"no"}).code == kExitUserError);
  CHECK(run({}).code == kExitUserError);
}

TEST_CASE("comm") {
  CHECK(run({"comm", "bd*b", "b"}).out == "- b_{}\n");
  CHECK(run({"comm", "b_1", "b_1"}).out == "0\n");
  CHECK(run({"comm", "b_1", "bd_2"}).out == "0\n");
}

TEST_CASE("lme") {
  CHECK(run({"lme", "--ham", "hbar*omega_0*bd*b", "--observable", "b", "--keep-hbar"}).out ==
        "\\frac{d}{d t} {\\left\\langle b_{} \\right\\rangle} = - i \\omega_{0} "
        "{\\left\\langle b_{} \\right\\rangle}\n");
  CHECK(run({"lme", "--ham", "hbar*omega_0*bd*b", "--observable", "bd*b", "--format", "plain"})
            .out == "d/dt <bd*b> = 0\n");
  CHECK(run({"lme", "--ham", "0", "--dissipator", "g;b_2;b_1", "--observable", "b_1",
             "--format", "plain"})
            .out == "d/dt <b_1> = -1/2*g*<b_2>\n");
  CHECK(run({"lme", "--ham", "0", "--dissipator", "g;b", "--dissipator", "p;bd", "--observable",
             "bd*b", "--format", "plain"})
            .out == "d/dt <bd*b> = p - g*<bd*b> + p*<bd*b>\n");
  CHECK(run({"lme", "--ham", "0", "--dissipator", "g", "--observable", "b"}).code ==
        kExitUserError);
  CHECK(run({"lme", "--ham", "0", "--dissipator", "g;b;b;b", "--observable", "b"}).code ==
        kExitUserError);
  CHECK(run({"lme", "--ham", "0", "--dissipator", "b;b", "--observable", "b"}).code ==
        kExitUserError);
  CHECK(run({"lme", "--ham", "bd*b", "--observable", "0"}).code == kExitUserError);
}

TEST_CASE("environment errors map to user errors") {
  ::setenv("BOLANO_WORKERS", "many", 1);
  const Run bad = run({"no", "b"});
  CHECK(bad.code == kExitUserError);
  CHECK(bad.err.rfind("error: InvalidArgument: BOLANO_WORKERS", 0) == 0);
  ::unsetenv("BOLANO_WORKERS");
}

TEST_CASE("render command") {
  const auto path = temp_path("bolano_test_record.json");
  {
    std::ofstream f(path);
    f << run({"no", "b*bd*b", "--format", "record"}).out;
  }
  CHECK(run({"render", path.string(), "--format", "plain"}).out == "b + bd*b^2\n");
  {
    std::ofstream f(path);
    f << R"({"kind":"normal_poly","terms":[]})";
  }
  const Run malformed = run({"render", path.string()});
  CHECK(malformed.code == kExitUserError);
  CHECK(malformed.err.rfind("error: RecordError: ", 0) == 0);
  std::filesystem::remove(path);
  const Run missing = run({"render", path.string()});
  CHECK(missing.code == kExitIoError);
  CHECK(missing.err.rfind("error: IoError: ", 0) == 0);
}

TEST_CASE("bench") {
  const Run one = run({"bench", "--trials", "1", "--ops", "1", "--modes", "1", "--seed", "0",
                       "--algo", "both"});
  CHECK(one.code == 0);
  std::istringstream lines(one.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "seed,trial,n_ops,n_modes,algo,nanos,terms");
  CHECK(first.substr(0, 14) == "0,0,1,1,blasia");
  CHECK(first.substr(first.rfind(',')) == ",1");
  CHECK(second.substr(second.rfind(',')) == ",1");
  CHECK(one.out.find("# median_ratio") != std::string::npos);

  const auto path = temp_path("bolano_test_bench.csv");
  const Run to_file = run({"bench", "--trials", "3", "--ops", "4", "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.find("median_ratio") == 0);
  std::ifstream f(path);
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  CHECK(rows == 7);
  std::filesystem::remove(path);

  CHECK(run({"bench", "--trials", "1", "--out", "/nonexistent/dir/x.csv"}).code == kExitIoError);
  CHECK(run({"bench", "--ops", "0"}).code == kExitUserError);
  CHECK(run({"bench", "--algo", "fast"}).code == kExitUserError);
}

TEST_CASE("bench workloads are reproducible") {
  BenchOptions opts;
  opts.seed = 42;
  opts.n_ops = 10;
  opts.n_modes = 2;
  for (unsigned t = 0; t < 20; ++t) CHECK(bench_word(opts, t) == bench_word(opts, t));
  CHECK(bench_word(opts, 0) != bench_word(opts, 1));
  opts.seed = 43;
  BenchOptions other = opts;
  other.seed = 42;
  CHECK(bench_word(opts, 0) != bench_word(other, 0));
  // Reference stream of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("bench summary statistics") {
  CHECK(median({3, 1, 2}) == 2);
  CHECK(median({4, 1, 2, 3}) == 2.5);
  BenchOptions opts;
  opts.trials = 5;
  opts.n_ops = 6;
  const auto summary = run_bench(opts);
  CHECK(summary.records.size() == 10);
  CHECK(summary.ratios.size() == 5);
  for (const auto& r : summary.records) {
    CHECK(r.wall_time.count() > 0);
    CHECK(r.term_count >= 1);
  }
  opts.algo = BenchAlgo::Blasiak;
  CHECK(run_bench(opts).ratios.empty());
}
