#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cointoss/state.hpp"

using namespace cointoss;

TEST_CASE("bell_phi_plus amplitudes") {
  const TwoQubitState s = bell_phi_plus();
  CHECK(s.amps[0].real() == doctest::Approx(0.7071067811865475).epsilon(1e-15));
  CHECK(s.amps[1] == Amp{0, 0});
  CHECK(s.amps[2] == Amp{0, 0});
  CHECK(s.amps[3].real() == doctest::Approx(0.7071067811865475).epsilon(1e-15));
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("schmidt_state endpoints and interior") {
  SUBCASE("theta=0 is the |00> product state") {
    const TwoQubitState s = schmidt_state(0.0);
    CHECK(s.amps[0] == Amp{1, 0});
    CHECK(s.amps[3] == Amp{0, 0});
  }
  SUBCASE("theta=pi/8 frozen values") {
    const TwoQubitState s = schmidt_state(std::numbers::pi / 8);
    CHECK(s.amps[0].real() == doctest::Approx(0.9238795325112867).epsilon(1e-15));
    CHECK(s.amps[3].real() == doctest::Approx(0.3826834323650898).epsilon(1e-15));
  }
  SUBCASE("theta=pi/4 equals the maximally entangled state") {
    const TwoQubitState s = schmidt_state(std::numbers::pi / 4);
    const TwoQubitState b = bell_phi_plus();
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(s.amps[k] - b.amps[k]) < 1e-12);
    }
  }
  SUBCASE("theta outside [0, pi/2] rejected") {
    CHECK_THROWS_AS(schmidt_state(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(schmidt_state(std::numbers::pi / 2 + 0.1), std::invalid_argument);
    CHECK_THROWS_AS(schmidt_state(std::nan("")), std::invalid_argument);
  }
}

TEST_CASE("validate rejects bad states with a diagnostic") {
  CHECK_NOTHROW(validate(TwoQubitState{{Amp{1, 0}, {}, {}, {}}}));

  const TwoQubitState unnormalized{{Amp{1, 0}, {}, {}, Amp{1, 0}}};
  CHECK_THROWS_WITH_AS(validate(unnormalized),
                       doctest::Contains("not normalized"), std::invalid_argument);

  const TwoQubitState non_finite{{Amp{std::nan(""), 0}, {}, {}, {}}};
  CHECK_THROWS_WITH_AS(validate(non_finite),
                       doctest::Contains("non-finite"), std::invalid_argument);
}
