// Parsed view of one game log with the derived indexes every metric needs.
// Everything is rebuilt from the raw event sequence; nothing downstream
// trusts any field the file could have carried precomputed.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wolfarena/engine/log_io.hpp"
#include "wolfarena/engine/votes.hpp"

namespace wolfarena {

struct DeathRecord {
  int seat = -1;
  DeathCause cause = DeathCause::WolfKill;
  int round = 0;
};

struct GuardAttempt {
  int round = 0;
  int target = -1;
  bool target_good = false;
  bool prevented_kill = false;   // guarded the wolves' victim and the victim lived
  bool target_died_at_night = false;  // the literal indicator variant
};

struct BallotRecord {
  std::optional<int> target;  // nullopt = abstain
  double weight = 1.0;
};

struct VoteRoundRecord {
  int round = 0;
  VoteKind kind = VoteKind::Official;
  int stage = 0;
  std::map<int, BallotRecord> ballots;
};

struct InferenceRecord {
  int round = 0;
  int seat = -1;
  std::map<int, Camp> claims;
};

struct SummaryRecord {
  int round = 0;
  int seat = -1;
  int recommended = -1;
};

class GameLogView {
 public:
  explicit GameLogView(GameLog log);  // throws EngineError on inconsistency

  const GameLog& log() const { return log_; }
  const std::string& game_id() const { return log_.header.game_id; }
  int n_players() const { return log_.header.config.n_players; }

  Role role(int seat) const { return roles_.at(static_cast<std::size_t>(seat)); }
  Camp camp(int seat) const { return camp_of(role(seat)); }
  const std::string& model_tag(int seat) const {
    return log_.header.model_tags.at(static_cast<std::size_t>(seat));
  }

  bool finished() const { return winner_.has_value(); }
  Camp winner() const { return *winner_; }
  int total_rounds() const { return total_rounds_; }
  std::set<int> winner_seats() const;

  const std::vector<int>& wolf_seats() const { return wolf_seats_; }
  int wolves_in_game() const { return static_cast<int>(wolf_seats_.size()); }

  bool alive_at_end(int seat) const { return deaths_by_seat_.count(seat) == 0; }
  std::optional<DeathRecord> death_of(int seat) const;

  // Seats holding a given role (independent of liveness).
  std::vector<int> seats_with_role(Role r) const;

  // Night-skill indexes.
  const std::vector<std::pair<int, int>>& seer_checks(int seat) const;  // (round, target)
  const std::vector<GuardAttempt>& guard_attempts(int seat) const;
  std::optional<int> witch_heal_target(int seat) const;
  std::optional<int> witch_poison_target(int seat) const;
  std::optional<std::pair<int, int>> hunter_shot(int seat) const;  // (round, target)

  const std::vector<VoteRoundRecord>& vote_rounds() const { return vote_rounds_; }
  const std::vector<InferenceRecord>& inferences() const { return inferences_; }
  const std::vector<SummaryRecord>& summaries() const { return summaries_; }
  std::optional<int> sheriff_seat() const { return sheriff_seat_; }

 private:
  void index();

  GameLog log_;
  std::vector<Role> roles_;
  std::vector<int> wolf_seats_;
  std::map<int, DeathRecord> deaths_by_seat_;
  std::optional<Camp> winner_;
  int total_rounds_ = 0;
  std::optional<int> sheriff_seat_;

  std::map<int, std::vector<std::pair<int, int>>> seer_checks_;
  std::map<int, std::vector<GuardAttempt>> guard_attempts_;
  std::map<int, int> witch_heal_targets_;
  std::map<int, int> witch_poison_targets_;
  std::map<int, std::pair<int, int>> hunter_shots_;
  std::vector<VoteRoundRecord> vote_rounds_;
  std::vector<InferenceRecord> inferences_;
  std::vector<SummaryRecord> summaries_;
};

}  // namespace wolfarena
