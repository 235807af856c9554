#ifndef COINTOSS_RNG_HPP
#define COINTOSS_RNG_HPP

#include <cstdint>

namespace cointoss {

/// Named draw streams. Every random number in the simulator is addressed by
/// (seed, stream, index) through a fixed mixing chain, so adding rounds or
/// trials never perturbs earlier draws and trials can run in any order.
enum class Stream : std::uint64_t {
  BasisChoice = 1,
  BobMeasure = 2,
  AliceMeasure = 3,
  TrialSeed = 4,
  SweepPoint = 5,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Mixing chain: seed -> stream tag -> index, one splitmix64 step each.
inline std::uint64_t derive_bits(std::uint64_t seed, Stream stream,
                                 std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) + static_cast<std::uint64_t>(stream)) +
                    index);
}

/// Uniform double in [0, 1) with 53 bits of precision.
inline double derive_unit(std::uint64_t seed, Stream stream,
                          std::uint64_t index) {
  return static_cast<double>(derive_bits(seed, stream, index) >> 11) * 0x1.0p-53;
}

/// Seed of trial `index` within a batch run under `master_seed`.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  return derive_bits(master_seed, Stream::TrialSeed, index);
}

/// Draw source for one protocol execution.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  double draw(Stream stream, std::uint64_t index) const {
    return derive_unit(seed_, stream, index);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace cointoss

#endif  // COINTOSS_RNG_HPP
