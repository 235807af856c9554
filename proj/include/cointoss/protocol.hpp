#ifndef COINTOSS_PROTOCOL_HPP
#define COINTOSS_PROTOCOL_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cointoss/rng.hpp"
#include "cointoss/strategy.hpp"

namespace cointoss {

struct ProtocolConfig {
  int rounds{1};          // number of pairs, >= 1
  std::uint64_t seed{0};  // sole source of randomness for the execution
};

/// One pair's worth of protocol record.
struct Round {
  int index{0};
  Basis basis{Basis::Z};          // Bob's choice, announced after measuring
  Outcome bob_outcome{Outcome::Zero};
  Outcome alice_announced{Outcome::Zero};  // Alice's claimed prediction
};

enum class Verdict { Zero, One, Invalid };

std::string to_string(Verdict v);

/// Full record of one protocol execution. parity_bit is present iff the
/// verdict is not Invalid, and then equals the XOR of all of Bob's
/// outcomes. With an honest Bob, verdict == Invalid exactly when some
/// announcement mismatches; a vetoing Bob may force Invalid without one.
struct Transcript {
  ProtocolConfig config;
  std::vector<Round> rounds;
  Verdict verdict{Verdict::Invalid};
  std::optional<int> parity_bit;
};

/// Bob's i.i.d. uniform basis choices, one per round, driven solely by rng.
std::vector<Basis> choose_bases(int rounds, const TrialRng& rng);

/// XOR of all outcome bits; rejects the empty list.
int compute_parity(const std::vector<Outcome>& outcomes);

/// True iff Alice's announcement equals Bob's outcome in every round.
/// Rejects an empty round list.
bool verify_announcements(const std::vector<Round>& rounds);

/// Runs one full execution: Alice prepares a pair per round and sends Bob
/// his half; Bob measures each in a random basis and announces all bases;
/// Alice measures her halves in those bases and announces her predictions;
/// Bob compares; on agreement the verdict is the parity of his outcomes,
/// otherwise Invalid. Deterministic in (config, strategies).
Transcript run_protocol(const ProtocolConfig& config,
                        const StrategySpec& alice_strategy,
                        const StrategySpec& bob_strategy);

/// Plain-text record: one line per round "index basis bobOutcome
/// aliceAnnounced", then a trailing "verdict <zero|one|invalid> [parity p]"
/// line. Stable across platforms for equal seeds.
std::string serialize_transcript(const Transcript& transcript);

}  // namespace cointoss

#endif  // COINTOSS_PROTOCOL_HPP
