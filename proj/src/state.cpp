#include "cointoss/state.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cointoss {

TwoQubitState bell_phi_plus() {
  const double r = 1.0 / std::numbers::sqrt2;
  return TwoQubitState{{Amp{r, 0.0}, Amp{0.0, 0.0}, Amp{0.0, 0.0}, Amp{r, 0.0}}};
}

TwoQubitState schmidt_state(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi / 2) {
    throw std::invalid_argument("schmidt_state: theta must lie in [0, pi/2], got " +
                                std::to_string(theta));
  }
  return TwoQubitState{{Amp{std::cos(theta), 0.0}, Amp{0.0, 0.0}, Amp{0.0, 0.0},
                        Amp{std::sin(theta), 0.0}}};
}

TwoQubitState validate(const TwoQubitState& state) {
  double norm_sq = 0.0;
  for (const Amp& a : state.amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("TwoQubitState: non-finite amplitude in " +
                                  to_string(state));
    }
    norm_sq += std::norm(a);
  }
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::invalid_argument("TwoQubitState: not normalized, |amps|^2 = " +
                                std::to_string(norm_sq));
  }
  return state;
}

std::string to_string(const TwoQubitState& state) {
  std::ostringstream out;
  out << "(";
  for (int k = 0; k < 4; ++k) {
    if (k) out << ", ";
    out << state.amps[k].real();
    if (state.amps[k].imag() != 0.0) out << (state.amps[k].imag() < 0 ? "" : "+")
                                         << state.amps[k].imag() << "i";
  }
  out << ")";
  return out.str();
}

}  // namespace cointoss
