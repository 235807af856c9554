#include "cointoss/strategy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cointoss {

StrategySpec StrategySpec::honest(Party party) {
  StrategySpec s;
  s.party = party;
  s.kind = Kind::Honest;
  return s;
}

StrategySpec StrategySpec::non_maximal(double theta) {
  StrategySpec s;
  s.party = Party::Alice;
  s.kind = Kind::NonMaximal;
  s.theta = theta;
  validate_strategy(s);
  return s;
}

StrategySpec StrategySpec::custom(const TwoQubitState& state) {
  StrategySpec s;
  s.party = Party::Alice;
  s.kind = Kind::CustomState;
  s.custom_state = validate(state);
  return s;
}

StrategySpec StrategySpec::abort_when_losing(int preferred_bit) {
  StrategySpec s;
  s.party = Party::Bob;
  s.kind = Kind::AbortWhenLosing;
  s.preferred_bit = preferred_bit;
  validate_strategy(s);
  return s;
}

void validate_strategy(const StrategySpec& strategy) {
  using Kind = StrategySpec::Kind;
  switch (strategy.kind) {
    case Kind::Honest:
      return;
    case Kind::NonMaximal:
      if (strategy.party != Party::Alice) {
        throw std::invalid_argument("strategy: nonmax is an Alice strategy");
      }
      if (!std::isfinite(strategy.theta) || strategy.theta < 0.0 ||
          strategy.theta > std::numbers::pi / 2) {
        throw std::invalid_argument("strategy: nonmax theta must lie in [0, pi/2]");
      }
      return;
    case Kind::CustomState:
      if (strategy.party != Party::Alice) {
        throw std::invalid_argument("strategy: custom is an Alice strategy");
      }
      validate(strategy.custom_state);
      return;
    case Kind::AbortWhenLosing:
      if (strategy.party != Party::Bob) {
        throw std::invalid_argument("strategy: abort-bias is a Bob strategy");
      }
      if (strategy.preferred_bit != 0 && strategy.preferred_bit != 1) {
        throw std::invalid_argument("strategy: abort-bias bit must be 0 or 1");
      }
      return;
  }
  throw std::invalid_argument("strategy: unknown kind");
}

StrategySpec parse_strategy(const std::string& text, Party party) {
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument("strategy '" + text + "': " + why);
  };
  if (text == "honest") return StrategySpec::honest(party);

  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "nonmax") {
    if (party != Party::Alice) throw bad("only valid for --alice");
    double theta = 0.0;
    try {
      std::size_t used = 0;
      theta = std::stod(args, &used);
      if (used != args.size()) throw std::invalid_argument("trailing");
    } catch (const std::invalid_argument&) {
      throw bad("expected nonmax:<theta-radians>");
    }
    try {
      return StrategySpec::non_maximal(theta);
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  if (head == "custom") {
    if (party != Party::Alice) throw bad("only valid for --alice");
    std::istringstream in(args);
    std::array<double, 8> parts{};
    for (int k = 0; k < 8; ++k) {
      std::string token;
      if (!std::getline(in, token, ',')) throw bad("expected 8 comma-separated reals");
      try {
        std::size_t used = 0;
        parts[k] = std::stod(token, &used);
        if (used != token.size()) throw bad("bad number '" + token + "'");
      } catch (const std::invalid_argument&) {
        throw bad("bad number '" + token + "'");
      }
    }
    if (in.rdbuf()->in_avail() > 0) throw bad("expected exactly 8 reals");
    TwoQubitState state;
    for (int k = 0; k < 4; ++k) state.amps[k] = Amp{parts[2 * k], parts[2 * k + 1]};
    try {
      return StrategySpec::custom(state);
    } catch (const std::invalid_argument& e) {
      throw bad(e.what());
    }
  }
  if (head == "abort-bias") {
    if (party != Party::Bob) throw bad("only valid for --bob");
    if (args == "0") return StrategySpec::abort_when_losing(0);
    if (args == "1") return StrategySpec::abort_when_losing(1);
    throw bad("expected abort-bias:<0|1>");
  }
  throw bad("unknown strategy kind '" + head + "'");
}

std::string format_strategy(const StrategySpec& strategy) {
  using Kind = StrategySpec::Kind;
  std::ostringstream out;
  out.precision(17);
  switch (strategy.kind) {
    case Kind::Honest:
      return "honest";
    case Kind::NonMaximal:
      out << "nonmax:" << strategy.theta;
      return out.str();
    case Kind::CustomState: {
      out << "custom:";
      for (int k = 0; k < 4; ++k) {
        if (k) out << ",";
        out << strategy.custom_state.amps[k].real() << ","
            << strategy.custom_state.amps[k].imag();
      }
      return out.str();
    }
    case Kind::AbortWhenLosing:
      return "abort-bias:" + std::to_string(strategy.preferred_bit);
  }
  return "?";
}

TwoQubitState alice_round_state(const StrategySpec& strategy) {
  using Kind = StrategySpec::Kind;
  if (strategy.party != Party::Alice) {
    throw std::invalid_argument("alice_round_state: not an Alice strategy");
  }
  switch (strategy.kind) {
    case Kind::Honest:
      return bell_phi_plus();
    case Kind::NonMaximal:
      return schmidt_state(strategy.theta);
    case Kind::CustomState:
      return strategy.custom_state;
    default:
      throw std::invalid_argument("alice_round_state: not an Alice strategy");
  }
}

std::vector<Outcome> alice_prediction_rule(const StrategySpec& strategy,
                                           const std::vector<Outcome>& alice_outcomes) {
  if (strategy.party != Party::Alice) {
    throw std::invalid_argument("alice_prediction_rule: not an Alice strategy");
  }
  validate_strategy(strategy);
  return alice_outcomes;
}

double analytic_pass_probability(const StrategySpec& strategy, int rounds) {
  if (rounds < 1) {
    throw std::invalid_argument("analytic_pass_probability: rounds must be >= 1");
  }
  if (strategy.party != Party::Alice) {
    throw std::invalid_argument("analytic_pass_probability: not an Alice strategy");
  }
  if (strategy.kind == StrategySpec::Kind::Honest) return 1.0;
  const TwoQubitState state = alice_round_state(strategy);
  const double match_z = prediction_match_probability(state, Basis::Z);
  const double match_x = prediction_match_probability(state, Basis::X);
  return std::pow((match_z + match_x) / 2.0, rounds);
}

}  // namespace cointoss
