#include "cointoss/protocol.hpp"

#include <sstream>
#include <stdexcept>

#include "cointoss/measure.hpp"

namespace cointoss {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::One: return "one";
    case Verdict::Invalid: return "invalid";
  }
  return "?";
}

std::vector<Basis> choose_bases(int rounds, const TrialRng& rng) {
  if (rounds < 1) throw std::invalid_argument("choose_bases: rounds must be >= 1");
  std::vector<Basis> bases;
  bases.reserve(static_cast<std::size_t>(rounds));
  for (int i = 0; i < rounds; ++i) {
    bases.push_back(rng.draw(Stream::BasisChoice, static_cast<std::uint64_t>(i)) < 0.5
                        ? Basis::Z
                        : Basis::X);
  }
  return bases;
}

int compute_parity(const std::vector<Outcome>& outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("compute_parity: empty outcome list");
  int parity = 0;
  for (Outcome o : outcomes) parity ^= bit(o);
  return parity;
}

bool verify_announcements(const std::vector<Round>& rounds) {
  if (rounds.empty()) {
    throw std::invalid_argument("verify_announcements: protocol requires N >= 1 rounds");
  }
  for (const Round& r : rounds) {
    if (r.alice_announced != r.bob_outcome) return false;
  }
  return true;
}

Transcript run_protocol(const ProtocolConfig& config,
                        const StrategySpec& alice_strategy,
                        const StrategySpec& bob_strategy) {
  if (config.rounds < 1) throw std::invalid_argument("run_protocol: rounds must be >= 1");
  if (alice_strategy.party != Party::Alice) {
    throw std::invalid_argument("run_protocol: --alice strategy has wrong party");
  }
  if (bob_strategy.party != Party::Bob) {
    throw std::invalid_argument("run_protocol: --bob strategy has wrong party");
  }
  validate_strategy(alice_strategy);
  validate_strategy(bob_strategy);

  const TrialRng rng(config.seed);
  const int n = config.rounds;

  // Step 1: Alice prepares the pairs; Bob holds the second qubit of each.
  const TwoQubitState prepared = validate(alice_round_state(alice_strategy));

  // Step 2: Bob measures every particle, then announces all bases at once.
  const std::vector<Basis> bases = choose_bases(n, rng);
  std::vector<Outcome> bob_outcomes;
  std::vector<TwoQubitState> collapsed;
  bob_outcomes.reserve(static_cast<std::size_t>(n));
  collapsed.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto [outcome, post] = measure_bob(
        prepared, bases[static_cast<std::size_t>(i)],
        rng.draw(Stream::BobMeasure, static_cast<std::uint64_t>(i)));
    bob_outcomes.push_back(outcome);
    collapsed.push_back(post);
  }

  // Step 3: Alice measures her stored halves along the announced axes.
  std::vector<Outcome> alice_outcomes;
  alice_outcomes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto [outcome, post] = measure_alice(
        collapsed[static_cast<std::size_t>(i)], bases[static_cast<std::size_t>(i)],
        rng.draw(Stream::AliceMeasure, static_cast<std::uint64_t>(i)));
    alice_outcomes.push_back(outcome);
  }

  // Step 4: Alice announces her predictions; Bob compares with his data.
  const std::vector<Outcome> announced =
      alice_prediction_rule(alice_strategy, alice_outcomes);

  Transcript transcript;
  transcript.config = config;
  transcript.rounds.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    transcript.rounds.push_back(Round{i, bases[static_cast<std::size_t>(i)],
                                      bob_outcomes[static_cast<std::size_t>(i)],
                                      announced[static_cast<std::size_t>(i)]});
  }

  if (!verify_announcements(transcript.rounds)) {
    transcript.verdict = Verdict::Invalid;
    return transcript;
  }

  // Step 5: the coin is the parity bit of all of Bob's outcomes.
  const int parity = compute_parity(bob_outcomes);

  if (bob_strategy.kind == StrategySpec::Kind::AbortWhenLosing &&
      parity != bob_strategy.preferred_bit) {
    // Bob vetoes an unfavorable coin by falsely claiming a mismatch.
    transcript.verdict = Verdict::Invalid;
    return transcript;
  }

  transcript.verdict = parity == 0 ? Verdict::Zero : Verdict::One;
  transcript.parity_bit = parity;
  return transcript;
}

std::string serialize_transcript(const Transcript& transcript) {
  std::ostringstream out;
  for (const Round& r : transcript.rounds) {
    out << r.index << ' ' << basis_letter(r.basis) << ' ' << bit(r.bob_outcome)
        << ' ' << bit(r.alice_announced) << '\n';
  }
  out << "verdict " << to_string(transcript.verdict);
  if (transcript.parity_bit) out << " parity " << *transcript.parity_bit;
  out << '\n';
  return out.str();
}

}  // namespace cointoss
