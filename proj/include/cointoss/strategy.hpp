#ifndef COINTOSS_STRATEGY_HPP
#define COINTOSS_STRATEGY_HPP

#include <string>
#include <vector>

#include "cointoss/measure.hpp"
#include "cointoss/state.hpp"

namespace cointoss {

/// Declarative description of one party's behavior.
///
/// Alice kinds: Honest (sends the maximally entangled state), NonMaximal
/// (sends cos(theta)|00> + sin(theta)|11> each round), CustomState (sends an
/// arbitrary validated pure state each round). Bob kinds: Honest,
/// AbortWhenLosing (follows the protocol but falsely reports a mismatch
/// whenever the parity bit differs from his preferred bit).
struct StrategySpec {
  enum class Kind { Honest, NonMaximal, CustomState, AbortWhenLosing };

  Party party{Party::Alice};
  Kind kind{Kind::Honest};
  double theta{0.0};             // NonMaximal only
  TwoQubitState custom_state{};  // CustomState only
  int preferred_bit{0};          // AbortWhenLosing only

  static StrategySpec honest(Party party);
  static StrategySpec non_maximal(double theta);
  static StrategySpec custom(const TwoQubitState& state);
  static StrategySpec abort_when_losing(int preferred_bit);
};

/// Checks party/kind compatibility and the kind's own invariants; throws
/// std::invalid_argument on violation.
void validate_strategy(const StrategySpec& strategy);

/// Parses the CLI strategy grammar: `honest`, `nonmax:<theta>`,
/// `custom:<re00>,<im00>,...,<im11>` (eight reals), `abort-bias:<0|1>`.
StrategySpec parse_strategy(const std::string& text, Party party);

/// Inverse of parse_strategy, used in reports.
std::string format_strategy(const StrategySpec& strategy);

/// The state Alice prepares each round under `strategy`.
TwoQubitState alice_round_state(const StrategySpec& strategy);

/// Alice's announced predictions of Bob's outcomes. Honest and all
/// state-substitution strategies announce her own measured outcomes, which
/// for the maximally entangled state reproduce Bob's exactly.
std::vector<Outcome> alice_prediction_rule(const StrategySpec& strategy,
                                           const std::vector<Outcome>& alice_outcomes);

/// Probability that Alice passes the comparison step over `rounds` i.i.d.
/// uniformly chosen bases: ((mZ + mX)/2)^rounds with the per-basis match
/// probabilities taken from the exact joint distribution. Returns 1 for
/// Honest; rejects Bob strategies.
double analytic_pass_probability(const StrategySpec& strategy, int rounds);

}  // namespace cointoss

#endif  // COINTOSS_STRATEGY_HPP
