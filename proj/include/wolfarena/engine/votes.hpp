// Weighted ballot collection and tallying. The sheriff's ballot weighs 1.5
// in official and tiebreak rounds; every other ballot weighs 1.0.
#pragma once

#include <map>
#include <optional>
#include <set>

#include "wolfarena/engine/event.hpp"

namespace wolfarena {

struct VoteRound {
  VoteKind kind = VoteKind::Official;
  // voter seat -> target seat; nullopt = abstain
  std::map<int, std::optional<int>> ballots;
  std::map<int, double> weights;
};

struct TallyResult {
  enum class Outcome { Winner, Tied, NoExile };
  Outcome outcome = Outcome::NoExile;
  int winner = -1;               // valid when outcome == Winner
  std::set<int> tied;            // valid when outcome == Tied
  std::map<int, double> totals;  // weighted sum per target

  bool is_winner() const { return outcome == Outcome::Winner; }
  bool is_tied() const { return outcome == Outcome::Tied; }
  bool no_exile() const { return outcome == Outcome::NoExile; }
};

// Weighted plurality. Unique maximum wins; several maxima tie; a round where
// every voter abstained resolves to NoExile. Weights are dyadic (1.0 / 1.5),
// so the double sums are exact.
TallyResult tally_votes(const VoteRound& round);

}  // namespace wolfarena
