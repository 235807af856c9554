#ifndef COINTOSS_SELFCHECK_HPP
#define COINTOSS_SELFCHECK_HPP

#include <string>
#include <vector>

#include "cointoss/state.hpp"

namespace cointoss {

struct CheckResult {
  std::string name;
  bool passed{false};
  double max_deviation{0.0};
  double tolerance{0.0};
};

/// Exact-oracle invariant suite: collapse normalization, marginal
/// uniformity, perfect correlation, sequential-measurement equivalence with
/// the joint distribution, measurement-order irrelevance, an independent
/// basis-rotation route for the joint distribution, Z-basis blindness and
/// match-probability monotonicity of the non-maximal family, and exhaustive
/// pass-probability enumeration over all basis strings for N <= max_rounds.
/// No sampling; every check is exact up to its stated tolerance.
///
/// `inject_perturbation` deliberately feeds a slightly denormalized state
/// into the normalization check, as a negative control.
std::vector<CheckResult> run_oracle_checks(int max_rounds = 4,
                                           bool inject_perturbation = false);

/// Deterministic grid of validated states used by the suite and the tests:
/// the maximally entangled state, the non-maximal family at several angles,
/// and pseudo-random complex states derived from `seed`.
std::vector<TwoQubitState> oracle_state_grid(std::uint64_t seed = 12345,
                                             int random_states = 8);

/// Exact probability that every round's announcement matches over all
/// 2^rounds equiprobable basis strings, enumerating both outcome branches
/// of each measurement through the collapse path. rounds <= 20.
double exhaustive_pass_probability(const TwoQubitState& state, int rounds);

/// Joint outcome distribution computed by rotating each measured qubit into
/// its measurement basis and reading squared magnitudes; an independent
/// route used to cross-check joint_distribution.
std::array<double, 4> rotated_basis_distribution(const TwoQubitState& state,
                                                 Basis basis_alice,
                                                 Basis basis_bob);

}  // namespace cointoss

#endif  // COINTOSS_SELFCHECK_HPP
