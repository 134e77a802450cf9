// The deterministic hidden-role phase machine. A Game owns one match: it
// deals roles from the seed, walks the night/day phase cursor, emits the
// exact set of agent decisions it awaits, validates and applies responses
// in ascending seat order, and appends every transition to the event log.
//
// Night and day of one round:
//   Night (wolves, guard, seer; then the witch once the victim is fixed)
//   Dawn (deaths announced, hunter window, win check)
//   Election (round 1 of sheriff games only)
//   Speeches -> [PseudoVote -> SheriffSummary]* -> Inference -> OfficialVote
//   tie flow: TieDebate -> TiebreakVote, a second tie exiles nobody
//   Dusk
// (*) pseudo-vote and summary run only while a sheriff holds the badge.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfarena/engine/request.hpp"
#include "wolfarena/engine/state.hpp"
#include "wolfarena/engine/votes.hpp"

namespace wolfarena {

class Game {
 public:
  explicit Game(GameConfig config);

  const GameState& state() const { return state_; }
  const std::vector<GameEvent>& events() const { return events_; }
  bool finished() const { return state_.phase == Phase::Finished; }
  std::optional<Camp> winner() const { return winner_; }

  // The decisions the current phase awaits. Empty only once the game is
  // finished; request-free phases resolve inside submit().
  std::vector<ActionRequest> pending_requests() const;

  // Applies one full batch of responses (one per pending request, any
  // order), advances the phase cursor as far as it can, and returns the
  // newly appended events. Throws EngineError on missing, surplus, or
  // illegal responses without mutating anything.
  std::vector<GameEvent> submit(const std::vector<AgentResponse>& responses);

 private:
  struct NightBuffer {
    bool main_collected = false;
    bool witch_collected = false;
    NightActions actions;
    std::optional<int> victim;  // fixed once the main batch is in
  };

  enum class HunterReturn { DayStart, Dusk };

  void validate_batch(const std::vector<AgentResponse>& responses) const;
  void validate_one(const AgentResponse& r, const ActionRequest& req) const;

  void apply_night_main(std::vector<AgentResponse> sorted);
  void apply_witch(const AgentResponse& r);
  void resolve_night_and_dawn();
  void apply_election(std::vector<AgentResponse> sorted);
  void apply_speaking_order(const AgentResponse& r);
  void apply_speech(const AgentResponse& r);
  void apply_pseudo_vote(std::vector<AgentResponse> sorted);
  void apply_sheriff_summary(const AgentResponse& r);
  void apply_inference(std::vector<AgentResponse> sorted);
  void apply_exile_vote(std::vector<AgentResponse> sorted, bool tiebreak);
  void apply_hunter(const AgentResponse& r);

  VoteRound collect_ballots(const std::vector<AgentResponse>& sorted, VoteKind kind,
                            int stage, bool weighted);
  void run_exile(int seat);
  void finish_day();
  void enter_day_start();
  void enter_speeches();
  void build_speaking_queue(int start, bool ascending);
  void enter_after_speeches();
  void apply_death(int seat, DeathCause cause);
  bool check_and_record_win();  // true when the game just ended
  void after_hunter_resolved();

  void push(GameEvent ev);
  bool sheriff_alive() const;

  GameState state_;
  std::vector<GameEvent> events_;
  std::optional<Camp> winner_;

  NightBuffer night_;
  std::vector<std::pair<int, DeathCause>> dawn_deaths_;  // this round's announcements

  bool election_done_ = false;
  int election_stage_ = 0;
  std::set<int> election_tied_;

  bool order_pending_ = false;         // sheriff still owes the speaking order
  std::vector<int> speaking_queue_;
  std::size_t speech_cursor_ = 0;

  std::map<int, double> pseudo_tallies_;
  std::set<int> tie_seats_;
  std::vector<int> debate_queue_;
  std::size_t debate_cursor_ = 0;

  DeathCause hunter_cause_ = DeathCause::WolfKill;
  HunterReturn hunter_return_ = HunterReturn::DayStart;
};

}  // namespace wolfarena
