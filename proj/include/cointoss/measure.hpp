#ifndef COINTOSS_MEASURE_HPP
#define COINTOSS_MEASURE_HPP

#include <utility>

#include "cointoss/state.hpp"

namespace cointoss {

enum class Party { Alice, Bob };

/// Born-rule probability that `party`'s measurement of `state` in `basis`
/// yields outcome 0.
double outcome_probability_zero(const TwoQubitState& state, Basis basis,
                                Party party);

/// Projective measurement of Bob's (second) qubit. Validates the input,
/// returns outcome 0 when random_draw < P(outcome 0) and 1 otherwise,
/// together with the renormalized collapsed state. random_draw must lie
/// in [0, 1).
std::pair<Outcome, TwoQubitState> measure_bob(const TwoQubitState& state,
                                              Basis basis, double random_draw);

/// Same contract for Alice's (first) qubit.
std::pair<Outcome, TwoQubitState> measure_alice(const TwoQubitState& state,
                                                Basis basis,
                                                double random_draw);

/// Exact joint outcome distribution obtained by projecting onto all four
/// product eigenstates. No randomness involved.
JointDistribution joint_distribution(const TwoQubitState& state,
                                     Basis basis_alice, Basis basis_bob);

/// Probability that Alice's outcome equals Bob's when both measure `state`
/// in `basis`: p(0,0) + p(1,1) of the joint distribution.
double prediction_match_probability(const TwoQubitState& state, Basis basis);

}  // namespace cointoss

#endif  // COINTOSS_MEASURE_HPP
