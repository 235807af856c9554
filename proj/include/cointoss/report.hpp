#ifndef COINTOSS_REPORT_HPP
#define COINTOSS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cointoss/protocol.hpp"

namespace cointoss {

/// Detection/bias summary of a cheating strategy, analytic fields from the
/// exact joint distribution and empirical fields from Monte Carlo trials.
struct CheatReport {
  double per_round_match_z{1.0};
  double per_round_match_x{1.0};
  std::optional<double> analytic_pass_probability;  // Alice strategies only
  double empirical_detection_rate{0.0};             // fraction Invalid
  double empirical_parity_bias_given_pass{0.0};     // P(parity=0 | pass) - 1/2
  std::int64_t zero_count{0};
  std::int64_t one_count{0};
  std::int64_t invalid_count{0};
};

/// Runs `trials` independent executions of (strategy vs honest counterpart)
/// with per-trial derived seeds. Trials share no state, so `threads` > 1
/// yields bit-identical counts to a sequential run.
CheatReport estimate_cheat_report(const StrategySpec& strategy,
                                  const ProtocolConfig& config,
                                  std::int64_t trials, int threads = 1);

/// Aggregated batch statistics in CLI-report form.
struct TrialBatchReport {
  std::int64_t trials{0};
  int rounds{0};
  std::uint64_t seed{0};
  std::string alice_strategy;
  std::string bob_strategy;
  std::int64_t zero_count{0};
  std::int64_t one_count{0};
  std::int64_t invalid_count{0};
  double detection_rate{0.0};
  double parity_bias_given_pass{0.0};
  std::optional<double> analytic_pass_probability;
  double wall_clock_seconds{0.0};
};

/// One Monte Carlo batch of full protocol executions.
TrialBatchReport run_batch(const ProtocolConfig& config,
                           const StrategySpec& alice_strategy,
                           const StrategySpec& bob_strategy,
                           std::int64_t trials, int threads = 1);

struct SweepReport {
  std::string parameter;  // currently always "theta"
  std::vector<std::pair<double, TrialBatchReport>> points;
};

/// Batches over NonMaximal(theta) for theta from `lo` to `hi` inclusive in
/// steps of `step`, against an honest Bob. Each point gets its own derived
/// seed so trials are independent across points.
SweepReport run_theta_sweep(double lo, double hi, double step,
                            const ProtocolConfig& config, std::int64_t trials,
                            int threads = 1);

std::string render_json(const TrialBatchReport& report);
std::string render_csv(const TrialBatchReport& report);
std::string render_csv(const SweepReport& report);

/// Full-precision decimal rendering (17 significant digits).
std::string format_full(double value);

}  // namespace cointoss

#endif  // COINTOSS_REPORT_HPP
