#include "wolfarena/engine/votes.hpp"

namespace wolfarena {

TallyResult tally_votes(const VoteRound& round) {
  TallyResult result;
  for (const auto& [voter, target] : round.ballots) {
    if (!target) continue;
    auto wit = round.weights.find(voter);
    double w = wit == round.weights.end() ? 1.0 : wit->second;
    result.totals[*target] += w;
  }
  if (result.totals.empty()) {
    result.outcome = TallyResult::Outcome::NoExile;
    return result;
  }
  double best = 0.0;
  for (const auto& [target, sum] : result.totals)
    if (sum > best) best = sum;
  for (const auto& [target, sum] : result.totals)
    if (sum == best) result.tied.insert(target);
  if (result.tied.size() == 1) {
    result.outcome = TallyResult::Outcome::Winner;
    result.winner = *result.tied.begin();
    result.tied.clear();
  } else {
    result.outcome = TallyResult::Outcome::Tied;
  }
  return result;
}

}  // namespace wolfarena
