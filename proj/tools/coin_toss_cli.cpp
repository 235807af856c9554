// Command-line front end for the coin-tossing simulator.
//
// Subcommands:
//   run    — one protocol execution, prints verdict and parity
//   batch  — Monte Carlo batch, JSON or CSV report
//   sweep  — detection rate and parity bias across the nonmax theta range
//   oracle — exact invariant self-checks, nonzero exit on any failure
//
// Exit codes: 0 success, 1 check/acceptance failure, 2 usage/parse error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cointoss/protocol.hpp"
#include "cointoss/report.hpp"
#include "cointoss/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

struct CommonFlags {
  int rounds = 16;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
  std::string alice = "honest";
  std::string bob = "honest";
  std::string format = "json";
  std::string out_path;
  int threads = 1;
};

void add_common(CLI::App& cmd, CommonFlags& flags, bool with_trials) {
  cmd.add_option("--rounds", flags.rounds, "Pairs per protocol execution")
      ->check(CLI::PositiveNumber);
  if (with_trials) {
    cmd.add_option("--trials", flags.trials, "Protocol executions in the batch")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--threads", flags.threads, "Worker threads (counts are thread-order independent)")
        ->check(CLI::PositiveNumber);
  }
  cmd.add_option("--seed", flags.seed, "Master seed; identical flags reproduce identical output");
  cmd.add_option("--alice", flags.alice,
                 "honest | nonmax:<theta> | custom:<8 comma-separated reals>");
  cmd.add_option("--bob", flags.bob, "honest | abort-bias:<0|1>");
  cmd.add_option("--out", flags.out_path, "Write the report here instead of stdout");
}

int cmd_run(const CommonFlags& flags, const std::string& dump_path) {
  const auto alice = cointoss::parse_strategy(flags.alice, cointoss::Party::Alice);
  const auto bob = cointoss::parse_strategy(flags.bob, cointoss::Party::Bob);
  const cointoss::Transcript transcript =
      cointoss::run_protocol({flags.rounds, flags.seed}, alice, bob);

  std::string text = "verdict " + cointoss::to_string(transcript.verdict);
  if (transcript.parity_bit) text += " parity " + std::to_string(*transcript.parity_bit);
  text += "\n";
  write_output(flags.out_path, text);
  if (!dump_path.empty()) {
    std::ofstream dump(dump_path);
    if (!dump) throw std::runtime_error("cannot open transcript file: " + dump_path);
    dump << cointoss::serialize_transcript(transcript);
  }
  return kExitOk;
}

int cmd_batch(const CommonFlags& flags) {
  const auto alice = cointoss::parse_strategy(flags.alice, cointoss::Party::Alice);
  const auto bob = cointoss::parse_strategy(flags.bob, cointoss::Party::Bob);
  const cointoss::TrialBatchReport report = cointoss::run_batch(
      {flags.rounds, flags.seed}, alice, bob, flags.trials, flags.threads);
  write_output(flags.out_path, flags.format == "csv" ? cointoss::render_csv(report)
                                                     : cointoss::render_json(report));
  return kExitOk;
}

int cmd_sweep(const CommonFlags& flags, const std::string& param, double from,
              double to, double step) {
  if (param != "theta") {
    std::cerr << "sweep: unsupported --param '" << param << "' (only theta)\n";
    return kExitUsage;
  }
  const cointoss::SweepReport report = cointoss::run_theta_sweep(
      from, to, step, {flags.rounds, flags.seed}, flags.trials, flags.threads);
  write_output(flags.out_path, cointoss::render_csv(report));
  return kExitOk;
}

int cmd_oracle(int max_rounds, bool perturb, const std::string& out_path) {
  const auto results = cointoss::run_oracle_checks(max_rounds, perturb);
  std::string text;
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    text += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name +
            "  max-deviation=" + cointoss::format_full(r.max_deviation) +
            "  tolerance=" + cointoss::format_full(r.tolerance) + "\n";
  }
  text += all_passed ? "all checks passed\n" : "CHECK FAILURES PRESENT\n";
  write_output(out_path, text);
  return all_passed ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-based coin-tossing protocol simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags, batch_flags, sweep_flags;
  std::string dump_path;
  std::string sweep_param = "theta";
  double sweep_from = 0.0, sweep_to = 0.0, sweep_step = 0.0;
  int oracle_max_rounds = 4;
  bool oracle_perturb = false;
  std::string oracle_out;

  CLI::App* run = app.add_subcommand("run", "One protocol execution");
  add_common(*run, run_flags, false);
  run->add_option("--dump-transcript", dump_path, "Write the round-by-round record here");

  CLI::App* batch = app.add_subcommand("batch", "Monte Carlo batch of executions");
  add_common(*batch, batch_flags, true);
  batch->add_option("--format", batch_flags.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep = app.add_subcommand("sweep", "Detection-rate sweep over nonmax theta");
  add_common(*sweep, sweep_flags, true);
  sweep->add_option("--param", sweep_param, "Swept parameter (theta)");
  sweep->add_option("--from", sweep_from, "Range start (inclusive)")->required();
  sweep->add_option("--to", sweep_to, "Range end (inclusive)")->required();
  sweep->add_option("--step", sweep_step, "Range step, > 0")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exact invariant self-checks");
  oracle->add_option("--max-rounds", oracle_max_rounds,
                     "Exhaustive enumeration covers all 2^N basis strings up to this N")
      ->check(CLI::Range(1, 20));
  oracle->add_flag("--perturb", oracle_perturb,
                   "Inject a denormalized amplitude (negative control; must fail)");
  oracle->add_option("--out", oracle_out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags, dump_path);
    if (batch->parsed()) return cmd_batch(batch_flags);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_flags, sweep_param, sweep_from, sweep_to, sweep_step);
    }
    return cmd_oracle(oracle_max_rounds, oracle_perturb, oracle_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
