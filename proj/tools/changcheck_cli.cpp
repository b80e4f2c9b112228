// Command-line front end for the level-1 weight verifier: per-set reports,
// divergence-chain traces, exhaustive/sampled sweeps, extremal-ratio search,
// and the superadditivity counterexample family.
//
// Exit codes: 0 success, 1 input error, 2 invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "changcheck/chang.hpp"
#include "changcheck/cube.hpp"
#include "changcheck/info.hpp"
#include "changcheck/json_io.hpp"

namespace {

struct CommonOptions {
  std::string set_path;
  std::string inline_spec;
  std::string format = "json";
  std::string out_path;
};

void add_set_options(CLI::App* cmd, CommonOptions& opts) {
  auto* set_opt =
      cmd->add_option("--set", opts.set_path, "Path to a set-spec JSON file");
  auto* inline_opt =
      cmd->add_option("--inline", opts.inline_spec, "Inline set-spec JSON");
  set_opt->excludes(inline_opt);
  inline_opt->excludes(set_opt);
}

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Write the primary payload to this file");
}

changcheck::CubeSet load_set(const CommonOptions& opts) {
  if (opts.set_path.empty() == opts.inline_spec.empty()) {
    throw std::invalid_argument(
        "provide exactly one of --set FILE or --inline JSON");
  }
  std::string text = opts.inline_spec;
  if (!opts.set_path.empty()) {
    std::ifstream file(opts.set_path);
    if (!file) {
      throw std::invalid_argument("cannot open set file: " + opts.set_path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return changcheck::parse_set_spec(std::string_view(text));
}

void require_json_format(const CommonOptions& opts) {
  if (opts.format != "json") {
    throw std::invalid_argument(
        "csv output is only available for the sweep commands");
  }
}

void emit_line(const std::string& line, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << line << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw std::invalid_argument("cannot open output file: " + out_path);
  }
  file << line << '\n';
}

int run_verify(const CommonOptions& opts) {
  require_json_format(opts);
  const changcheck::CubeSet set = load_set(opts);
  const changcheck::ChangReport report =
      changcheck::verify_chang(set.to_indicator());
  emit_line(changcheck::report_json(report).dump(), opts.out_path);
  return report.holds ? 0 : 2;
}

int run_trace(const CommonOptions& opts) {
  require_json_format(opts);
  const changcheck::CubeSet set = load_set(opts);
  const changcheck::ProofTrace trace =
      changcheck::proof_trace(set.to_indicator());
  emit_line(changcheck::trace_json(trace).dump(), opts.out_path);
  return 0;
}

int run_levelk(const CommonOptions& opts, int k) {
  require_json_format(opts);
  const changcheck::CubeSet set = load_set(opts);
  const changcheck::LevelKReport report =
      changcheck::level_k_report(set.to_indicator(), k);
  emit_line(changcheck::level_k_json(report).dump(), opts.out_path);
  return (report.applicable && !report.holds) ? 2 : 0;
}

int run_extremal(const CommonOptions& opts, int n) {
  require_json_format(opts);
  const changcheck::ExtremalResult result = changcheck::extremal_search(n);
  changcheck::Json out;
  out["n"] = n;
  out["max_ratio"] = result.max_ratio;
  out["argmax_set"] = changcheck::set_spec_json(result.argmax_set);
  out["argmax_report"] = changcheck::report_json(result.reports.front().report);
  emit_line(out.dump(), opts.out_path);
  return 0;
}

// Summary JSON always goes to stdout; with --format csv the per-set rows are
// the primary payload and go to --out (or stdout, ahead of the summary).
int emit_sweep(const changcheck::SweepResult& result, const CommonOptions& opts) {
  if (opts.format == "csv") {
    if (!opts.out_path.empty()) {
      std::ofstream file(opts.out_path);
      if (!file) {
        throw std::invalid_argument("cannot open output file: " + opts.out_path);
      }
      changcheck::write_sweep_csv(file, result.rows);
    } else {
      changcheck::write_sweep_csv(std::cout, result.rows);
    }
    std::cout << changcheck::summary_json(result.summary).dump() << '\n';
  } else {
    emit_line(changcheck::summary_json(result.summary).dump(), opts.out_path);
  }
  return result.summary.violations == 0 ? 0 : 2;
}

int run_exhaustive(const CommonOptions& opts, int n) {
  changcheck::SweepOptions sweep;
  sweep.collect_rows = (opts.format == "csv");
  return emit_sweep(changcheck::exhaustive_verify(n, sweep), opts);
}

int run_sample(const CommonOptions& opts, int n, std::uint64_t trials,
               std::uint64_t seed) {
  changcheck::SweepOptions sweep;
  sweep.collect_rows = (opts.format == "csv");
  return emit_sweep(changcheck::sampled_verify(n, trials, seed, sweep), opts);
}

int run_counterexample(const CommonOptions& opts, double eps) {
  require_json_format(opts);
  const auto [p, q] = changcheck::counterexample_pair(eps);
  const changcheck::DivergenceBreakdown breakdown =
      changcheck::raw_breakdown(p, q);
  emit_line(changcheck::breakdown_json(breakdown).dump(), opts.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-1 Fourier weight verifier for subsets of the Boolean cube"};
  app.require_subcommand(1);

  CommonOptions verify_opts;
  auto* verify = app.add_subcommand(
      "verify", "Check the density bound on one set and print the report");
  add_set_options(verify, verify_opts);
  add_output_options(verify, verify_opts);

  CommonOptions trace_opts;
  auto* trace = app.add_subcommand(
      "trace", "Replay the divergence chain behind the bound for one set");
  add_set_options(trace, trace_opts);
  add_output_options(trace, trace_opts);

  CommonOptions levelk_opts;
  int levelk_k = 1;
  auto* levelk = app.add_subcommand(
      "levelk", "Check the cumulative level-k weight predicate for one set");
  add_set_options(levelk, levelk_opts);
  add_output_options(levelk, levelk_opts);
  levelk->add_option("--k", levelk_k, "Level cutoff, 1 <= k <= n")->required();

  CommonOptions exhaustive_opts;
  int exhaustive_n = 0;
  auto* exhaustive = app.add_subcommand(
      "exhaustive", "Verify every nonempty subset at dimension n <= 4");
  exhaustive->add_option("--n", exhaustive_n, "Cube dimension")->required();
  add_output_options(exhaustive, exhaustive_opts);

  CommonOptions sample_opts;
  int sample_n = 0;
  std::uint64_t sample_trials = 0;
  std::uint64_t sample_seed = 0;
  auto* sample = app.add_subcommand(
      "sample", "Verify random nonempty subsets at dimension n <= 24");
  sample->add_option("--n", sample_n, "Cube dimension")->required();
  sample->add_option("--trials", sample_trials, "Number of random sets")->required();
  sample->add_option("--seed", sample_seed, "RNG seed (default 0)");
  add_output_options(sample, sample_opts);

  CommonOptions extremal_opts;
  int extremal_n = 0;
  auto* extremal = app.add_subcommand(
      "extremal", "Maximize w1/bound over nonempty proper subsets, n <= 4");
  extremal->add_option("--n", extremal_n, "Cube dimension")->required();
  add_output_options(extremal, extremal_opts);

  CommonOptions counter_opts;
  double counter_eps = 0.0;
  auto* counter = app.add_subcommand(
      "counterexample",
      "Divergence breakdown for the 2x2 family where superadditivity fails");
  counter->add_option("--eps", counter_eps, "Perturbation, -1/4 < eps < 1/12")
      ->required();
  add_output_options(counter, counter_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(verify_opts);
    if (app.got_subcommand(trace)) return run_trace(trace_opts);
    if (app.got_subcommand(levelk)) return run_levelk(levelk_opts, levelk_k);
    if (app.got_subcommand(exhaustive))
      return run_exhaustive(exhaustive_opts, exhaustive_n);
    if (app.got_subcommand(sample))
      return run_sample(sample_opts, sample_n, sample_trials, sample_seed);
    if (app.got_subcommand(extremal))
      return run_extremal(extremal_opts, extremal_n);
    if (app.got_subcommand(counter))
      return run_counterexample(counter_opts, counter_eps);
  } catch (const changcheck::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
