#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "cointoss/report.hpp"

using namespace cointoss;

namespace {
const StrategySpec kHonestAlice = StrategySpec::honest(Party::Alice);
const StrategySpec kHonestBob = StrategySpec::honest(Party::Bob);
}  // namespace

TEST_CASE("batch report arithmetic") {
  const TrialBatchReport r = run_batch({8, 21}, kHonestAlice, kHonestBob, 5000);
  CHECK(r.zero_count + r.one_count + r.invalid_count == r.trials);
  CHECK(r.detection_rate ==
        static_cast<double>(r.invalid_count) / static_cast<double>(r.trials));
  CHECK(r.trials == 5000);
  CHECK(r.rounds == 8);
  CHECK(r.alice_strategy == "honest");
}

TEST_CASE("a one-trial batch is still a valid report") {
  const TrialBatchReport r = run_batch({4, 0}, kHonestAlice, kHonestBob, 1);
  CHECK(r.zero_count + r.one_count + r.invalid_count == 1);
}

TEST_CASE("JSON and CSV renderings carry identical numbers") {
  const TrialBatchReport r = run_batch(
      {16, 9}, StrategySpec::non_maximal(0.3), kHonestBob, 2000);
  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["trials"] == r.trials);
  CHECK(j["counts"]["zero"] == r.zero_count);
  CHECK(j["counts"]["one"] == r.one_count);
  CHECK(j["counts"]["invalid"] == r.invalid_count);
  CHECK(j["detectionRate"].get<double>() == r.detection_rate);
  CHECK(j["parityBiasGivenPass"].get<double>() == r.parity_bias_given_pass);
  REQUIRE(r.analytic_pass_probability.has_value());
  CHECK(j["analyticPassProbability"].get<double>() == *r.analytic_pass_probability);

  const std::string csv = render_csv(r);
  CHECK(csv.find("trials,rounds,seed") == 0);
  CHECK(csv.find(std::to_string(r.zero_count)) != std::string::npos);
  CHECK(csv.find(format_full(r.detection_rate)) != std::string::npos);
  // Full precision survives the CSV round trip.
  CHECK(std::stod(format_full(*r.analytic_pass_probability)) ==
        *r.analytic_pass_probability);
}

TEST_CASE("batches are deterministic apart from the wall clock") {
  const auto strip = [](std::string text) {
    const auto pos = text.find("wallClockSeconds");
    return text.substr(0, pos);
  };
  const TrialBatchReport a = run_batch({16, 77}, kHonestAlice, kHonestBob, 3000);
  const TrialBatchReport b = run_batch({16, 77}, kHonestAlice, kHonestBob, 3000);
  CHECK(strip(render_json(a)) == strip(render_json(b)));
}

TEST_CASE("parallel trials reproduce sequential counts exactly") {
  const StrategySpec cheat = StrategySpec::non_maximal(0.5);
  const TrialBatchReport seq = run_batch({12, 13}, cheat, kHonestBob, 4001, 1);
  const TrialBatchReport par = run_batch({12, 13}, cheat, kHonestBob, 4001, 4);
  CHECK(seq.zero_count == par.zero_count);
  CHECK(seq.one_count == par.one_count);
  CHECK(seq.invalid_count == par.invalid_count);
}

TEST_CASE("theta sweep covers the range inclusively with sorted unique points") {
  const SweepReport sweep = run_theta_sweep(0.0, 0.7854, 0.0491, {4, 1}, 50);
  CHECK(sweep.parameter == "theta");
  CHECK(sweep.points.size() == 17);
  CHECK(sweep.points.front().first == 0.0);
  CHECK(sweep.points.back().first == doctest::Approx(0.7854));
  for (std::size_t i = 1; i < sweep.points.size(); ++i) {
    CHECK(sweep.points[i].first > sweep.points[i - 1].first);
  }
  const std::string csv = render_csv(sweep);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 18);  // header + 17 rows
  CHECK(csv.rfind("theta,trials,", 0) == 0);
}

TEST_CASE("sweep rejects bad ranges") {
  CHECK_THROWS_AS(run_theta_sweep(0.5, 0.1, 0.1, {4, 1}, 10), std::invalid_argument);
  CHECK_THROWS_AS(run_theta_sweep(0.0, 0.5, 0.0, {4, 1}, 10), std::invalid_argument);
}

TEST_CASE("sweep endpoints behave like their strategies") {
  const int trials = 4000;
  const SweepReport sweep =
      run_theta_sweep(0.0, 0.7853981633974483, 0.7853981633974483 / 2, {16, 31}, trials);
  REQUIRE(sweep.points.size() == 3);

  // theta = pi/4 is honest in disguise: nothing to detect.
  const TrialBatchReport& honest_point = sweep.points.back().second;
  CHECK(honest_point.invalid_count == 0);

  // theta = 0 is detected almost surely at N=16.
  const TrialBatchReport& product_point = sweep.points.front().second;
  const double expected = 0.9899774042423815;  // 1 - (3/4)^16
  const double bound = 5.0 * std::sqrt(expected * (1 - expected) / trials);
  CHECK(std::abs(product_point.detection_rate - expected) < bound);
}
