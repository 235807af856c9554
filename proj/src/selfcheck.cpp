#include "cointoss/selfcheck.hpp"

#include <cmath>
#include <numbers>

#include "cointoss/measure.hpp"
#include "cointoss/rng.hpp"
#include "cointoss/strategy.hpp"

namespace cointoss {

namespace {

constexpr double kExact = 1e-12;
constexpr std::array<Basis, 2> kBases{Basis::Z, Basis::X};

double prob_of(const TwoQubitState& state, Basis basis, Party party, int outcome) {
  const double p0 = outcome_probability_zero(state, basis, party);
  return outcome == 0 ? p0 : 1.0 - p0;
}

// A draw value that forces `outcome`; only valid when its probability > 0.
double forcing_draw(double p_zero, int outcome) {
  return outcome == 0 ? p_zero * 0.5 : (1.0 + p_zero) * 0.5;
}

// Joint distribution induced by measuring Bob first, then Alice, with both
// branch probabilities enumerated analytically through the collapse path.
std::array<double, 4> sequential_distribution(const TwoQubitState& state,
                                              Basis basis_alice, Basis basis_bob,
                                              bool bob_first) {
  std::array<double, 4> joint{};
  const Party first = bob_first ? Party::Bob : Party::Alice;
  const Basis first_basis = bob_first ? basis_bob : basis_alice;
  const Basis second_basis = bob_first ? basis_alice : basis_bob;
  const auto measure_first = bob_first ? measure_bob : measure_alice;

  const double p0_first = outcome_probability_zero(state, first_basis, first);
  for (int o1 = 0; o1 < 2; ++o1) {
    const double p1 = o1 == 0 ? p0_first : 1.0 - p0_first;
    if (p1 <= 0.0) continue;
    const TwoQubitState collapsed =
        measure_first(state, first_basis, forcing_draw(p0_first, o1)).second;
    const double p0_second = outcome_probability_zero(
        collapsed, second_basis, first == Party::Bob ? Party::Alice : Party::Bob);
    for (int o2 = 0; o2 < 2; ++o2) {
      const double p2 = o2 == 0 ? p0_second : 1.0 - p0_second;
      const int a = bob_first ? o2 : o1;
      const int b = bob_first ? o1 : o2;
      joint[2 * a + b] += p1 * p2;
    }
  }
  return joint;
}

// Per-round probability that Alice's outcome equals Bob's, by enumerating
// Bob's branches and the post-collapse Alice distribution.
double branch_match_probability(const TwoQubitState& state, Basis basis) {
  const double p0 = outcome_probability_zero(state, basis, Party::Bob);
  double match = 0.0;
  for (int b = 0; b < 2; ++b) {
    const double pb = b == 0 ? p0 : 1.0 - p0;
    if (pb <= 0.0) continue;
    const TwoQubitState collapsed =
        measure_bob(state, basis, forcing_draw(p0, b)).second;
    match += pb * prob_of(collapsed, basis, Party::Alice, b);
  }
  return match;
}

void record(std::vector<CheckResult>& results, const std::string& name,
            double max_deviation, double tolerance) {
  results.push_back(CheckResult{name, max_deviation <= tolerance, max_deviation,
                                tolerance});
}

}  // namespace

std::vector<TwoQubitState> oracle_state_grid(std::uint64_t seed, int random_states) {
  std::vector<TwoQubitState> grid;
  grid.push_back(bell_phi_plus());
  for (double theta : {0.0, std::numbers::pi / 8, std::numbers::pi / 4,
                       3 * std::numbers::pi / 8, std::numbers::pi / 2}) {
    grid.push_back(schmidt_state(theta));
  }
  for (int s = 0; s < random_states; ++s) {
    TwoQubitState state;
    double norm_sq = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double re = derive_unit(seed, Stream::TrialSeed, 8u * s + 2u * k) - 0.5;
      const double im = derive_unit(seed, Stream::TrialSeed, 8u * s + 2u * k + 1) - 0.5;
      state.amps[k] = Amp{re, im};
      norm_sq += std::norm(state.amps[k]);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& a : state.amps) a *= scale;
    grid.push_back(validate(state));
  }
  return grid;
}

double exhaustive_pass_probability(const TwoQubitState& state, int rounds) {
  // Match probabilities per basis, each from full branch enumeration.
  const double match_z = branch_match_probability(state, Basis::Z);
  const double match_x = branch_match_probability(state, Basis::X);
  const double string_prob = std::pow(0.5, rounds);
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << rounds); ++mask) {
    double pass = string_prob;
    for (int i = 0; i < rounds; ++i) {
      pass *= (mask >> i) & 1u ? match_x : match_z;
    }
    total += pass;
  }
  return total;
}

std::array<double, 4> rotated_basis_distribution(const TwoQubitState& state,
                                                 Basis basis_alice,
                                                 Basis basis_bob) {
  // Hadamard on a qubit maps its X measurement onto a Z readout.
  const double r = 1.0 / std::numbers::sqrt2;
  std::array<Amp, 4> amps = state.amps;
  if (basis_alice == Basis::X) {
    for (int b = 0; b < 2; ++b) {
      const Amp top = amps[b], bottom = amps[2 + b];
      amps[b] = r * (top + bottom);
      amps[2 + b] = r * (top - bottom);
    }
  }
  if (basis_bob == Basis::X) {
    for (int a = 0; a < 2; ++a) {
      const Amp left = amps[2 * a], right = amps[2 * a + 1];
      amps[2 * a] = r * (left + right);
      amps[2 * a + 1] = r * (left - right);
    }
  }
  std::array<double, 4> probs{};
  for (int k = 0; k < 4; ++k) probs[k] = std::norm(amps[k]);
  return probs;
}

std::vector<CheckResult> run_oracle_checks(int max_rounds, bool inject_perturbation) {
  std::vector<CheckResult> results;
  const std::vector<TwoQubitState> grid = oracle_state_grid();

  // Collapse normalization across the grid, both parties, bases, branches.
  {
    double dev = 0.0;
    for (const TwoQubitState& state : grid) {
      for (Basis basis : kBases) {
        for (Party party : {Party::Alice, Party::Bob}) {
          const double p0 = outcome_probability_zero(state, basis, party);
          for (int o = 0; o < 2; ++o) {
            if (prob_of(state, basis, party, o) <= 1e-9) continue;
            const auto measure = party == Party::Bob ? measure_bob : measure_alice;
            const TwoQubitState post =
                measure(state, basis, forcing_draw(p0, o)).second;
            double norm_sq = 0.0;
            for (const Amp& a : post.amps) norm_sq += std::norm(a);
            dev = std::max(dev, std::abs(norm_sq - 1.0));
          }
        }
      }
    }
    if (inject_perturbation) {
      TwoQubitState bad = bell_phi_plus();
      bad.amps[0] += 1e-6;
      double norm_sq = 0.0;
      for (const Amp& a : bad.amps) norm_sq += std::norm(a);
      dev = std::max(dev, std::abs(norm_sq - 1.0));
    }
    record(results, "collapse-normalization", dev, kExact);
  }

  // Marginal uniformity of the maximally entangled state.
  {
    double dev = 0.0;
    for (Basis basis : kBases) {
      const JointDistribution d = joint_distribution(bell_phi_plus(), basis, basis);
      dev = std::max(dev, std::abs(d.p(0, 0) + d.p(1, 0) - 0.5));
      dev = std::max(dev, std::abs(d.p(0, 1) + d.p(1, 1) - 0.5));
    }
    record(results, "marginal-uniformity", dev, kExact);
  }

  // Perfect correlation: no off-diagonal mass in equal bases.
  {
    double dev = 0.0;
    for (Basis basis : kBases) {
      const JointDistribution d = joint_distribution(bell_phi_plus(), basis, basis);
      dev = std::max({dev, d.p(0, 1), d.p(1, 0)});
    }
    record(results, "perfect-correlation", dev, kExact);
  }

  // Sequential collapse reproduces the joint distribution; both orders.
  {
    double dev_seq = 0.0, dev_order = 0.0;
    for (const TwoQubitState& state : grid) {
      for (Basis ba : kBases) {
        for (Basis bb : kBases) {
          const JointDistribution joint = joint_distribution(state, ba, bb);
          const auto bob_first = sequential_distribution(state, ba, bb, true);
          const auto alice_first = sequential_distribution(state, ba, bb, false);
          for (int k = 0; k < 4; ++k) {
            dev_seq = std::max(dev_seq, std::abs(bob_first[k] - joint.probs[k]));
            dev_order = std::max(dev_order, std::abs(alice_first[k] - bob_first[k]));
          }
        }
      }
    }
    record(results, "sequential-equals-joint", dev_seq, kExact);
    record(results, "measurement-order-irrelevance", dev_order, kExact);
  }

  // Independent basis-rotation route agrees with the projection route.
  {
    double dev = 0.0;
    for (const TwoQubitState& state : grid) {
      for (Basis ba : kBases) {
        for (Basis bb : kBases) {
          const JointDistribution joint = joint_distribution(state, ba, bb);
          const auto rotated = rotated_basis_distribution(state, ba, bb);
          for (int k = 0; k < 4; ++k) {
            dev = std::max(dev, std::abs(rotated[k] - joint.probs[k]));
          }
        }
      }
    }
    record(results, "rotation-route-agreement", dev, kExact);
  }

  // Z-basis blindness of the non-maximal family.
  {
    double dev = 0.0;
    for (int i = 0; i <= 32; ++i) {
      const double theta = i * (std::numbers::pi / 2) / 32;
      dev = std::max(dev, std::abs(prediction_match_probability(
                              schmidt_state(theta), Basis::Z) - 1.0));
    }
    record(results, "z-basis-blindness", dev, kExact);
  }

  // Pass probability rises to the maximal-entanglement point, then falls.
  {
    double violation = 0.0;
    const double step = std::numbers::pi / 64;
    double prev = analytic_pass_probability(StrategySpec::non_maximal(0.0), 4);
    for (int i = 1; i <= 32; ++i) {
      const double theta = i * step;
      const double cur =
          analytic_pass_probability(StrategySpec::non_maximal(theta), 4);
      if (theta <= std::numbers::pi / 4 + 1e-15) {
        violation = std::max(violation, prev - cur);
      } else {
        violation = std::max(violation, cur - prev);
      }
      prev = cur;
    }
    record(results, "pass-probability-monotonicity", violation, kExact);
  }

  // Exhaustive enumeration matches the closed form for small N.
  {
    double dev = 0.0;
    for (double theta : {0.0, std::numbers::pi / 8, std::numbers::pi / 4}) {
      for (int n = 1; n <= max_rounds; ++n) {
        const double exhaustive =
            exhaustive_pass_probability(schmidt_state(theta), n);
        const double analytic =
            analytic_pass_probability(StrategySpec::non_maximal(theta), n);
        dev = std::max(dev, std::abs(exhaustive - analytic));
      }
    }
    record(results, "exhaustive-pass-enumeration", dev, kExact);
  }

  // The non-maximal family hits the maximally entangled state at pi/4.
  {
    double dev = 0.0;
    const TwoQubitState a = schmidt_state(std::numbers::pi / 4);
    const TwoQubitState b = bell_phi_plus();
    for (int k = 0; k < 4; ++k) dev = std::max(dev, std::abs(a.amps[k] - b.amps[k]));
    record(results, "maximal-point-identity", dev, kExact);
  }

  return results;
}

}  // namespace cointoss
