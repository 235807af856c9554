#ifndef COINTOSS_STATE_HPP
#define COINTOSS_STATE_HPP

#include <array>
#include <complex>
#include <string>

namespace cointoss {

using Amp = std::complex<double>;

/// Measurement axis. Z eigenstates are |0>,|1>; X eigenstates are
/// |+>,|-> = (|0> +- |1>)/sqrt(2).
enum class Basis { Z, X };

/// Measurement outcome: 0 encodes the +1 spin eigenvalue, 1 the -1 eigenvalue.
enum class Outcome : int { Zero = 0, One = 1 };

inline int bit(Outcome o) { return static_cast<int>(o); }
inline char basis_letter(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

/// Pure state of one Alice-Bob pair. amps[2*a + b] is the amplitude of
/// |a>_Alice |b>_Bob; Alice holds the first qubit, Bob the second.
/// Must be normalized to within kNormTolerance before use; construct via
/// validate() or one of the factory functions.
struct TwoQubitState {
  std::array<Amp, 4> amps{};
};

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kProbClamp = -1e-15;

/// Exact four-entry Born-rule distribution over joint outcomes (a, b).
struct JointDistribution {
  std::array<double, 4> probs{};  // indexed 2*a + b
  Basis basis_alice{Basis::Z};
  Basis basis_bob{Basis::Z};

  double p(int a, int b) const { return probs[2 * a + b]; }
};

/// The maximally entangled state (|00> + |11>)/sqrt(2). Both Z/Z and X/X
/// measurements on it give equal outcomes with certainty.
TwoQubitState bell_phi_plus();

/// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/2]. Equals
/// bell_phi_plus() at theta = pi/4; a product state at the endpoints.
/// Throws std::invalid_argument outside the range.
TwoQubitState schmidt_state(double theta);

/// Checks normalization and finiteness; returns the state unchanged on
/// success, throws std::invalid_argument naming the violated invariant.
TwoQubitState validate(const TwoQubitState& state);

std::string to_string(const TwoQubitState& state);

}  // namespace cointoss

#endif  // COINTOSS_STATE_HPP
