#include "cointoss/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "cointoss/measure.hpp"

namespace cointoss {

namespace {

struct Counts {
  std::int64_t zero{0};
  std::int64_t one{0};
  std::int64_t invalid{0};

  void add(const Counts& other) {
    zero += other.zero;
    one += other.one;
    invalid += other.invalid;
  }
};

Counts count_trials(const ProtocolConfig& config, const StrategySpec& alice,
                    const StrategySpec& bob, std::int64_t first,
                    std::int64_t last) {
  Counts counts;
  for (std::int64_t t = first; t < last; ++t) {
    ProtocolConfig trial_config = config;
    trial_config.seed = trial_seed(config.seed, static_cast<std::uint64_t>(t));
    const Transcript transcript = run_protocol(trial_config, alice, bob);
    switch (transcript.verdict) {
      case Verdict::Zero: ++counts.zero; break;
      case Verdict::One: ++counts.one; break;
      case Verdict::Invalid: ++counts.invalid; break;
    }
  }
  return counts;
}

Counts run_trials(const ProtocolConfig& config, const StrategySpec& alice,
                  const StrategySpec& bob, std::int64_t trials, int threads) {
  if (trials < 1) throw std::invalid_argument("batch: trials must be >= 1");
  if (threads < 1) threads = 1;
  if (threads == 1 || trials < 2 * threads) {
    return count_trials(config, alice, bob, 0, trials);
  }
  std::vector<Counts> partial(static_cast<std::size_t>(threads));
  std::vector<std::thread> workers;
  const std::int64_t chunk = (trials + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const std::int64_t first = w * chunk;
    const std::int64_t last = std::min<std::int64_t>(first + chunk, trials);
    if (first >= last) break;
    workers.emplace_back([&, w, first, last] {
      partial[static_cast<std::size_t>(w)] =
          count_trials(config, alice, bob, first, last);
    });
  }
  for (auto& t : workers) t.join();
  Counts total;
  for (const Counts& c : partial) total.add(c);
  return total;
}

}  // namespace

CheatReport estimate_cheat_report(const StrategySpec& strategy,
                                  const ProtocolConfig& config,
                                  std::int64_t trials, int threads) {
  validate_strategy(strategy);
  const StrategySpec alice = strategy.party == Party::Alice
                                 ? strategy
                                 : StrategySpec::honest(Party::Alice);
  const StrategySpec bob = strategy.party == Party::Bob
                               ? strategy
                               : StrategySpec::honest(Party::Bob);

  CheatReport report;
  const TwoQubitState state = alice_round_state(alice);
  report.per_round_match_z = prediction_match_probability(state, Basis::Z);
  report.per_round_match_x = prediction_match_probability(state, Basis::X);
  if (strategy.party == Party::Alice) {
    report.analytic_pass_probability =
        analytic_pass_probability(alice, config.rounds);
  }

  const Counts counts = run_trials(config, alice, bob, trials, threads);
  report.zero_count = counts.zero;
  report.one_count = counts.one;
  report.invalid_count = counts.invalid;
  report.empirical_detection_rate =
      static_cast<double>(counts.invalid) / static_cast<double>(trials);
  const std::int64_t passed = counts.zero + counts.one;
  report.empirical_parity_bias_given_pass =
      passed == 0 ? 0.0
                  : static_cast<double>(counts.zero) / static_cast<double>(passed) - 0.5;
  return report;
}

TrialBatchReport run_batch(const ProtocolConfig& config,
                           const StrategySpec& alice_strategy,
                           const StrategySpec& bob_strategy,
                           std::int64_t trials, int threads) {
  const auto start = std::chrono::steady_clock::now();
  validate_strategy(alice_strategy);
  validate_strategy(bob_strategy);
  if (config.rounds < 1) throw std::invalid_argument("batch: rounds must be >= 1");

  const Counts counts = run_trials(config, alice_strategy, bob_strategy, trials, threads);

  TrialBatchReport report;
  report.trials = trials;
  report.rounds = config.rounds;
  report.seed = config.seed;
  report.alice_strategy = format_strategy(alice_strategy);
  report.bob_strategy = format_strategy(bob_strategy);
  report.zero_count = counts.zero;
  report.one_count = counts.one;
  report.invalid_count = counts.invalid;
  report.detection_rate =
      static_cast<double>(counts.invalid) / static_cast<double>(trials);
  const std::int64_t passed = counts.zero + counts.one;
  report.parity_bias_given_pass =
      passed == 0 ? 0.0
                  : static_cast<double>(counts.zero) / static_cast<double>(passed) - 0.5;
  // With a vetoing Bob the Alice-side pass probability does not predict the
  // invalid rate, so the analytic field is only filled under an honest Bob.
  if (bob_strategy.kind == StrategySpec::Kind::Honest) {
    report.analytic_pass_probability =
        analytic_pass_probability(alice_strategy, config.rounds);
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SweepReport run_theta_sweep(double lo, double hi, double step,
                            const ProtocolConfig& config, std::int64_t trials,
                            int threads) {
  if (!(step > 0.0)) throw std::invalid_argument("sweep: step must be > 0");
  if (hi < lo) throw std::invalid_argument("sweep: empty range, hi < lo");

  std::vector<double> values;
  const double eps = step * 1e-9;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + eps) break;
    values.push_back(v);
  }
  if (values.empty() || values.back() < hi - eps) values.push_back(hi);

  SweepReport sweep;
  sweep.parameter = "theta";
  for (std::size_t i = 0; i < values.size(); ++i) {
    ProtocolConfig point_config = config;
    point_config.seed = derive_bits(config.seed, Stream::SweepPoint, i);
    const TrialBatchReport report =
        run_batch(point_config, StrategySpec::non_maximal(values[i]),
                  StrategySpec::honest(Party::Bob), trials, threads);
    sweep.points.emplace_back(values[i], report);
  }
  return sweep;
}

std::string format_full(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string render_json(const TrialBatchReport& report) {
  nlohmann::ordered_json j;
  j["trials"] = report.trials;
  j["rounds"] = report.rounds;
  j["seed"] = report.seed;
  j["aliceStrategy"] = report.alice_strategy;
  j["bobStrategy"] = report.bob_strategy;
  j["counts"] = {{"zero", report.zero_count},
                 {"one", report.one_count},
                 {"invalid", report.invalid_count}};
  j["detectionRate"] = report.detection_rate;
  j["parityBiasGivenPass"] = report.parity_bias_given_pass;
  if (report.analytic_pass_probability) {
    j["analyticPassProbability"] = *report.analytic_pass_probability;
  } else {
    j["analyticPassProbability"] = nullptr;
  }
  j["wallClockSeconds"] = report.wall_clock_seconds;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_row(const TrialBatchReport& r) {
  std::ostringstream out;
  out << r.trials << ',' << r.rounds << ',' << r.seed << ',' << r.alice_strategy
      << ',' << r.bob_strategy << ',' << r.zero_count << ',' << r.one_count << ','
      << r.invalid_count << ',' << format_full(r.detection_rate) << ','
      << format_full(r.parity_bias_given_pass) << ','
      << (r.analytic_pass_probability ? format_full(*r.analytic_pass_probability) : "")
      << ',' << format_full(r.wall_clock_seconds);
  return out.str();
}

constexpr const char* kBatchHeader =
    "trials,rounds,seed,aliceStrategy,bobStrategy,zero,one,invalid,"
    "detectionRate,parityBiasGivenPass,analyticPassProbability,wallClockSeconds";

}  // namespace

std::string render_csv(const TrialBatchReport& report) {
  return std::string(kBatchHeader) + "\n" + csv_row(report) + "\n";
}

std::string render_csv(const SweepReport& report) {
  std::ostringstream out;
  out << report.parameter << ',' << kBatchHeader << '\n';
  for (const auto& [value, batch] : report.points) {
    out << format_full(value) << ',' << csv_row(batch) << '\n';
  }
  return out.str();
}

}  // namespace cointoss
