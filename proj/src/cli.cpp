#include "bolano/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "bolano/bench.hpp"
#include "bolano/errors.hpp"
#include "bolano/lindblad.hpp"
#include "bolano/normord.hpp"
#include "bolano/parser.hpp"
#include "bolano/render.hpp"

namespace bolano {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string format = "latex";
  std::optional<unsigned> workers;
  std::optional<int> min_summands;
  bool no_parallel = false;

  Format parsed_format() const {
    if (format == "plain") return Format::Plain;
    if (format == "record") return Format::Record;
    return Format::Latex;
  }

  ParallelConfig config() const {
    ParallelConfig cfg = ParallelConfig::from_env();
    if (workers) cfg.workers = *workers;
    if (min_summands) cfg.min_summands = *min_summands;
    if (no_parallel) cfg.enable = false;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "record"}))
      ->capture_default_str();
  cmd->add_option("--workers", flags.workers, "Worker threads for normal ordering")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-summands", flags.min_summands,
                  "Smallest summand count that is split across workers");
  cmd->add_flag("--no-parallel", flags.no_parallel, "Normal-order on the calling thread");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

DissipatorSpec parse_dissipator(const std::string& entry) {
  const auto parts = split(entry, ';');
  if (parts.size() < 2 || parts.size() > 3 ||
      std::any_of(parts.begin(), parts.end(), blank)) {
    throw UnsupportedExpression("dissipator must be \"rate;O\" or \"rate;O;P\", got \"" +
                                entry + "\"");
  }
  const LadderPoly rate = parse_poly(parts[0]);
  if (!rate.is_scalar()) {
    throw UnsupportedExpression("dissipator rate must not contain ladder operators");
  }
  if (parts.size() == 2) return {rate.scalar_part(), parse_poly(parts[1])};
  return {rate.scalar_part(), parse_poly(parts[1]), parse_poly(parts[2])};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

std::string error_kind(const Error& e) {
  if (dynamic_cast<const NonIntegerLadderPower*>(&e)) return "NonIntegerLadderPower";
  if (dynamic_cast<const UnsupportedBounds*>(&e)) return "UnsupportedBounds";
  if (dynamic_cast<const UnsupportedScalarPower*>(&e)) return "UnsupportedScalarPower";
  if (dynamic_cast<const UnsupportedExpression*>(&e)) return "UnsupportedExpression";
  if (dynamic_cast<const ComplexSymbolUnsupported*>(&e)) return "ComplexSymbolUnsupported";
  if (dynamic_cast<const EmptyObservable*>(&e)) return "EmptyObservable";
  if (dynamic_cast<const RecordError*>(&e)) return "RecordError";
  return "Error";
}

int run_bench_cmd(const BenchOptions& opts, const std::string& out_path, std::ostream& out) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw IoError("cannot write " + out_path);
  }
  const BenchSummary summary = run_bench(opts);
  std::ostream& csv = out_path.empty() ? out : file;
  write_bench_csv(csv, summary.records);
  if (!out_path.empty()) {
    file.close();
    if (!file) throw IoError("cannot write " + out_path);
  }
  if (!summary.ratios.empty()) {
    const char* prefix = out_path.empty() ? "# " : "";
    out << std::setprecision(4) << prefix << "median_ratio " << summary.median_ratio << '\n'
        << prefix << "mean_ratio " << summary.mean_ratio << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal ordering of bosonic ladder polynomials", "bolano"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string no_expr;
  auto* no_cmd = app.add_subcommand("no", "Normal-order an expression");
  no_cmd->add_option("expr", no_expr, "Operator expression")->required();
  add_common(no_cmd, flags);

  std::string comm_a, comm_b;
  auto* comm_cmd = app.add_subcommand("comm", "Normal-ordered commutator [A, B]");
  comm_cmd->add_option("A", comm_a)->required();
  comm_cmd->add_option("B", comm_b)->required();
  add_common(comm_cmd, flags);

  std::string ham, observable;
  std::vector<std::string> dissipators;
  bool keep_hbar = false;
  auto* lme_cmd = app.add_subcommand("lme", "Evolution equation of an expectation value");
  lme_cmd->add_option("--ham", ham, "Hamiltonian")->required();
  lme_cmd->add_option("--dissipator", dissipators, "\"rate;O[;P]\", repeatable")
      ->allow_extra_args(false);
  lme_cmd->add_option("--observable", observable, "Observable A")->required();
  lme_cmd->add_flag("--keep-hbar", keep_hbar, "Keep hbar symbolic instead of setting it to 1");
  add_common(lme_cmd, flags);

  BenchOptions bench;
  std::string algo = "both", bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time Blasiak against flatten-and-swap");
  bench_cmd->add_option("--ops", bench.n_ops, "Operators per monomial")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--modes", bench.n_modes, "Number of modes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--trials", bench.trials, "Number of monomials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Workload seed")->capture_default_str();
  bench_cmd->add_option("--algo", algo, "blasiak, baseline or both")
      ->check(CLI::IsMember({"blasiak", "baseline", "both"}))
      ->capture_default_str();
  bench_cmd->add_option("--repeat", bench.repeat, "Keep the fastest of this many runs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV destination (default stdout)");

  std::string record_path;
  auto* render_cmd = app.add_subcommand("render", "Render a saved record");
  render_cmd->add_option("file", record_path, "Record file")->required();
  add_common(render_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kExitUserError;
  }

  try {
    const Format format = flags.parsed_format();
    if (*no_cmd) {
      out << render(normal_order(parse_poly(no_expr), flags.config()), format) << '\n';
    } else if (*comm_cmd) {
      out << render(commutator_no(parse_poly(comm_a), parse_poly(comm_b), flags.config()),
                    format)
          << '\n';
    } else if (*lme_cmd) {
      LindbladSpec spec;
      spec.H = parse_poly(ham);
      spec.hbar_is_one = !keep_hbar;
      for (const auto& d : dissipators) spec.dissipators.push_back(parse_dissipator(d));
      out << render(lme_expval_evo(spec, parse_poly(observable), flags.config()), format)
          << '\n';
    } else if (*bench_cmd) {
      bench.algo = algo == "blasiak"    ? BenchAlgo::Blasiak
                   : algo == "baseline" ? BenchAlgo::Baseline
                                        : BenchAlgo::Both;
      return run_bench_cmd(bench, bench_out, out);
    } else if (*render_cmd) {
      const RecordValue value = parse_record(read_file(record_path));
      std::visit([&](const auto& v) { out << render(v, format) << '\n'; }, value);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << " at offset " << e.offset();
    if (!e.expected().empty()) {
      err << " (expected";
      for (const auto& x : e.expected()) err << ' ' << x;
      err << ')';
    }
    err << '\n';
    return kExitUserError;
  } catch (const InvariantViolation& e) {
    err << "error: InvariantViolation: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const IoError& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: InvalidArgument: " << e.what() << '\n';
    return kExitUserError;
  }
}

}  // namespace bolano
