#include "cointoss/measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cointoss {

namespace {

// Single-qubit eigenvector of `basis` for outcome `o`, components in the
// computational basis.
std::array<Amp, 2> eigenvector(Basis basis, int o) {
  if (basis == Basis::Z) {
    return o == 0 ? std::array<Amp, 2>{Amp{1, 0}, Amp{0, 0}}
                  : std::array<Amp, 2>{Amp{0, 0}, Amp{1, 0}};
  }
  const double r = 1.0 / std::numbers::sqrt2;
  return o == 0 ? std::array<Amp, 2>{Amp{r, 0}, Amp{r, 0}}
                : std::array<Amp, 2>{Amp{r, 0}, Amp{-r, 0}};
}

int index_of(Party party, int own, int other) {
  return party == Party::Alice ? 2 * own + other : 2 * other + own;
}

// Projection of `state` onto eigenvector `v` of `party`'s qubit, without
// renormalization. Returns the projected amplitudes and their squared norm.
std::pair<std::array<Amp, 4>, double> project(const TwoQubitState& state,
                                              Party party,
                                              const std::array<Amp, 2>& v) {
  std::array<Amp, 4> out{};
  double weight = 0.0;
  for (int other = 0; other < 2; ++other) {
    Amp inner{0, 0};
    for (int own = 0; own < 2; ++own) {
      inner += std::conj(v[own]) * state.amps[index_of(party, own, other)];
    }
    weight += std::norm(inner);
    for (int own = 0; own < 2; ++own) {
      out[index_of(party, own, other)] = inner * v[own];
    }
  }
  return {out, weight};
}

std::pair<Outcome, TwoQubitState> measure(const TwoQubitState& state,
                                          Basis basis, Party party,
                                          double random_draw) {
  validate(state);
  if (!(random_draw >= 0.0 && random_draw < 1.0)) {
    throw std::invalid_argument("measure: random draw must lie in [0, 1)");
  }
  const double p_zero = outcome_probability_zero(state, basis, party);
  const Outcome outcome = random_draw < p_zero ? Outcome::Zero : Outcome::One;
  auto [projected, weight] = project(state, party, eigenvector(basis, bit(outcome)));
  TwoQubitState collapsed;
  const double scale = 1.0 / std::sqrt(weight);
  for (int k = 0; k < 4; ++k) collapsed.amps[k] = projected[k] * scale;
  return {outcome, collapsed};
}

}  // namespace

double outcome_probability_zero(const TwoQubitState& state, Basis basis,
                                Party party) {
  return project(state, party, eigenvector(basis, 0)).second;
}

std::pair<Outcome, TwoQubitState> measure_bob(const TwoQubitState& state,
                                              Basis basis, double random_draw) {
  return measure(state, basis, Party::Bob, random_draw);
}

std::pair<Outcome, TwoQubitState> measure_alice(const TwoQubitState& state,
                                                Basis basis,
                                                double random_draw) {
  return measure(state, basis, Party::Alice, random_draw);
}

JointDistribution joint_distribution(const TwoQubitState& state,
                                     Basis basis_alice, Basis basis_bob) {
  validate(state);
  JointDistribution dist;
  dist.basis_alice = basis_alice;
  dist.basis_bob = basis_bob;
  for (int a = 0; a < 2; ++a) {
    const auto va = eigenvector(basis_alice, a);
    for (int b = 0; b < 2; ++b) {
      const auto vb = eigenvector(basis_bob, b);
      Amp inner{0, 0};
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          inner += std::conj(va[j]) * std::conj(vb[k]) * state.amps[2 * j + k];
        }
      }
      double p = std::norm(inner);
      if (p < 0.0) {
        if (p < kProbClamp) {
          throw std::domain_error("joint_distribution: negative probability");
        }
        p = 0.0;
      }
      dist.probs[2 * a + b] = p;
    }
  }
  return dist;
}

double prediction_match_probability(const TwoQubitState& state, Basis basis) {
  const JointDistribution d = joint_distribution(state, basis, basis);
  return d.p(0, 0) + d.p(1, 1);
}

}  // namespace cointoss
