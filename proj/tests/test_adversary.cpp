#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cointoss/protocol.hpp"
#include "cointoss/report.hpp"
#include "cointoss/selfcheck.hpp"
#include "cointoss/strategy.hpp"

using namespace cointoss;

TEST_CASE("strategy parsing") {
  CHECK(parse_strategy("honest", Party::Alice).kind == StrategySpec::Kind::Honest);
  CHECK(parse_strategy("honest", Party::Bob).party == Party::Bob);

  const StrategySpec nm = parse_strategy("nonmax:0.3927", Party::Alice);
  CHECK(nm.kind == StrategySpec::Kind::NonMaximal);
  CHECK(nm.theta == doctest::Approx(0.3927));

  const StrategySpec cs =
      parse_strategy("custom:0.6,0,0,0,0,0,0.8,0", Party::Alice);
  CHECK(cs.kind == StrategySpec::Kind::CustomState);
  CHECK(cs.custom_state.amps[0] == Amp{0.6, 0});
  CHECK(cs.custom_state.amps[3] == Amp{0.8, 0});

  const StrategySpec ab = parse_strategy("abort-bias:1", Party::Bob);
  CHECK(ab.kind == StrategySpec::Kind::AbortWhenLosing);
  CHECK(ab.preferred_bit == 1);

  CHECK_THROWS_WITH_AS(parse_strategy("nonmax:2.0", Party::Bob),
                       doctest::Contains("--alice"), std::invalid_argument);
  CHECK_THROWS_AS(parse_strategy("nonmax:9.9", Party::Alice), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_strategy("nonmax:xyz", Party::Alice),
                       doctest::Contains("nonmax"), std::invalid_argument);
  CHECK_THROWS_AS(parse_strategy("custom:1,0,0,0", Party::Alice), std::invalid_argument);
  CHECK_THROWS_AS(parse_strategy("custom:1,0,0,0,0,0,0,1", Party::Alice),
                  std::invalid_argument);  // unnormalized
  CHECK_THROWS_AS(parse_strategy("abort-bias:2", Party::Bob), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_strategy("bogus", Party::Alice),
                       doctest::Contains("bogus"), std::invalid_argument);
}

TEST_CASE("strategy formatting round-trips") {
  for (const char* text : {"honest", "nonmax:0.25", "custom:0.6,0,0,0,0,0,0.8,0"}) {
    const StrategySpec s = parse_strategy(text, Party::Alice);
    const StrategySpec again = parse_strategy(format_strategy(s), Party::Alice);
    CHECK(again.kind == s.kind);
    CHECK(again.theta == s.theta);
  }
  CHECK(format_strategy(parse_strategy("abort-bias:0", Party::Bob)) == "abort-bias:0");
}

TEST_CASE("alice_prediction_rule announces her own outcomes") {
  const std::vector<Outcome> outcomes{Outcome::Zero, Outcome::One, Outcome::One};
  CHECK(alice_prediction_rule(StrategySpec::honest(Party::Alice), outcomes) == outcomes);
  CHECK(alice_prediction_rule(StrategySpec::non_maximal(0.0), outcomes) == outcomes);
  CHECK_THROWS_AS(alice_prediction_rule(StrategySpec::honest(Party::Bob), outcomes),
                  std::invalid_argument);
}

TEST_CASE("analytic_pass_probability") {
  CHECK(analytic_pass_probability(StrategySpec::non_maximal(std::numbers::pi / 4), 37) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(analytic_pass_probability(StrategySpec::non_maximal(std::numbers::pi / 8), 1) ==
        doctest::Approx(0.9267766952966369).epsilon(1e-13));
  CHECK(analytic_pass_probability(StrategySpec::non_maximal(0.0), 20) ==
        doctest::Approx(0.0031712119389339932).epsilon(1e-12));
  CHECK(analytic_pass_probability(StrategySpec::honest(Party::Alice), 10) == 1.0);
  CHECK_THROWS_AS(analytic_pass_probability(StrategySpec::honest(Party::Bob), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(analytic_pass_probability(StrategySpec::non_maximal(0.1), 0),
                  std::invalid_argument);
}

TEST_CASE("exhaustive enumeration agrees with the closed form for N <= 4") {
  for (double theta : {0.0, std::numbers::pi / 8, std::numbers::pi / 4}) {
    for (int n = 1; n <= 4; ++n) {
      CHECK(std::abs(exhaustive_pass_probability(schmidt_state(theta), n) -
                     analytic_pass_probability(StrategySpec::non_maximal(theta), n)) <
            1e-12);
    }
  }
  // Also for a custom state with complex amplitudes.
  const TwoQubitState custom = oracle_state_grid().back();
  const StrategySpec strategy = StrategySpec::custom(custom);
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(exhaustive_pass_probability(custom, n) -
                   analytic_pass_probability(strategy, n)) < 1e-12);
  }
}

TEST_CASE("pass probability peaks at the maximal-entanglement point") {
  const double step = std::numbers::pi / 64;
  double prev = analytic_pass_probability(StrategySpec::non_maximal(0.0), 8);
  for (int i = 1; i <= 32; ++i) {
    const double theta = i * step;
    const double cur = analytic_pass_probability(StrategySpec::non_maximal(theta), 8);
    if (theta <= std::numbers::pi / 4 + 1e-15) {
      CHECK(cur >= prev - 1e-15);
    } else {
      CHECK(cur <= prev + 1e-15);
    }
    prev = cur;
  }
}

TEST_CASE("nonmax(pi/4) is transcript-identical to honest") {
  const StrategySpec disguised = StrategySpec::non_maximal(std::numbers::pi / 4);
  const StrategySpec honest = StrategySpec::honest(Party::Alice);
  const StrategySpec bob = StrategySpec::honest(Party::Bob);
  for (std::uint64_t seed : {0ull, 7ull, 42ull, 987654321ull}) {
    const ProtocolConfig config{16, seed};
    CHECK(serialize_transcript(run_protocol(config, disguised, bob)) ==
          serialize_transcript(run_protocol(config, honest, bob)));
  }
}

TEST_CASE("honest Alice is never detected") {
  const CheatReport r =
      estimate_cheat_report(StrategySpec::honest(Party::Alice), {16, 3}, 10000);
  CHECK(r.empirical_detection_rate == 0.0);
  CHECK(r.invalid_count == 0);
  CHECK(r.per_round_match_z == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.per_round_match_x == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(r.analytic_pass_probability.has_value());
  CHECK(*r.analytic_pass_probability == 1.0);
}

TEST_CASE("nonmax detection rate matches the analytic prediction") {
  const int trials = 20000;
  const CheatReport r = estimate_cheat_report(
      StrategySpec::non_maximal(std::numbers::pi / 8), {16, 11}, trials);
  REQUIRE(r.analytic_pass_probability.has_value());
  const double expected = 1.0 - *r.analytic_pass_probability;
  const double bound = 5.0 * std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::abs(r.empirical_detection_rate - expected) < bound);
}

TEST_CASE("a vetoing Bob forces his preferred bit among passing runs") {
  const int trials = 20000;
  const CheatReport r =
      estimate_cheat_report(StrategySpec::abort_when_losing(0), {8, 5}, trials);
  CHECK_FALSE(r.analytic_pass_probability.has_value());
  CHECK(r.one_count == 0);  // every losing run is vetoed
  CHECK(r.zero_count > 0);
  CHECK(r.empirical_parity_bias_given_pass == doctest::Approx(0.5).epsilon(1e-12));
  // He vetoes about half of all runs.
  const double bound = 5.0 * std::sqrt(0.25 / trials);
  CHECK(std::abs(r.empirical_detection_rate - 0.5) < bound);
}
