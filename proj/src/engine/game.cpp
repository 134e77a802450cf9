#include "wolfarena/engine/game.hpp"

#include <algorithm>
#include <sstream>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

namespace {

std::string join_seats(const std::set<int>& seats) {
  std::ostringstream oss;
  bool first = true;
  for (int s : seats) {
    if (!first) oss << " ";
    oss << s;
    first = false;
  }
  return oss.str();
}

std::set<int> minus_seat(std::set<int> seats, int seat) {
  seats.erase(seat);
  return seats;
}

}  // namespace

Game::Game(GameConfig config) {
  config.validate();
  state_.config = config;
  state_.roles = config.roster;
  SplitMix64 rng(config.seed);
  deterministic_shuffle(state_.roles, rng);
  state_.rng_state = rng.state();
  for (int seat = 0; seat < config.n_players; ++seat) state_.alive.insert(seat);
  state_.round = 1;
  state_.phase = Phase::Night;
  for (int seat = 0; seat < config.n_players; ++seat)
    push(GameEvent::role_assigned(1, seat, state_.roles[static_cast<std::size_t>(seat)]));
}

void Game::push(GameEvent ev) { events_.push_back(std::move(ev)); }

bool Game::sheriff_alive() const {
  return state_.sheriff && state_.is_alive(*state_.sheriff);
}

std::vector<ActionRequest> Game::pending_requests() const {
  std::vector<ActionRequest> requests;
  if (finished()) return requests;

  if (state_.pending_hunter) {
    ActionRequest req;
    req.kind = RequestKind::HunterShot;
    req.seat = *state_.pending_hunter;
    req.legal_targets = state_.alive;
    requests.push_back(std::move(req));
    return requests;
  }

  auto ballot_request = [&](RequestKind kind, int seat, std::set<int> legal) {
    ActionRequest req;
    req.kind = kind;
    req.seat = seat;
    req.legal_targets = std::move(legal);
    return req;
  };

  switch (state_.phase) {
    case Phase::Night: {
      if (!night_.main_collected) {
        for (int seat : state_.alive) {
          switch (state_.role(seat)) {
            case Role::Werewolf:
              requests.push_back(ballot_request(RequestKind::WolfProposal, seat,
                                                minus_seat(state_.alive, seat)));
              break;
            case Role::Guard:
              requests.push_back(ballot_request(RequestKind::GuardTarget, seat,
                                                legal_guard_targets(state_)));
              break;
            case Role::Seer:
              requests.push_back(ballot_request(RequestKind::SeerTarget, seat,
                                                minus_seat(state_.alive, seat)));
              break;
            default:
              break;
          }
        }
      } else {
        auto witch = state_.seat_of(Role::Witch);
        if (witch && !night_.witch_collected &&
            (state_.witch_heal_available || state_.witch_poison_available)) {
          ActionRequest req;
          req.kind = RequestKind::WitchDecision;
          req.seat = *witch;
          req.victim = night_.victim;
          req.can_heal = state_.witch_heal_available;
          req.can_poison = state_.witch_poison_available;
          req.can_use_both = state_.config.witch_both_potions_same_night;
          req.legal_targets = minus_seat(state_.alive, *witch);
          requests.push_back(std::move(req));
        }
      }
      break;
    }
    case Phase::Election: {
      std::set<int> legal = election_stage_ == 0 ? state_.alive : election_tied_;
      for (int seat : state_.alive)
        requests.push_back(ballot_request(RequestKind::ElectionBallot, seat, legal));
      break;
    }
    case Phase::Speeches: {
      if (order_pending_) {
        requests.push_back(ballot_request(RequestKind::SpeakingOrderChoice,
                                          *state_.sheriff, state_.alive));
      } else if (speech_cursor_ < speaking_queue_.size()) {
        ActionRequest req;
        req.kind = RequestKind::Speech;
        req.seat = speaking_queue_[speech_cursor_];
        requests.push_back(std::move(req));
      }
      break;
    }
    case Phase::PseudoVote: {
      for (int seat : state_.alive)
        requests.push_back(ballot_request(RequestKind::PseudoBallot, seat, state_.alive));
      break;
    }
    case Phase::SheriffSummary: {
      ActionRequest req;
      req.kind = RequestKind::SheriffSummaryRequest;
      req.seat = *state_.sheriff;
      req.legal_targets = state_.alive;
      req.first_round_tallies = pseudo_tallies_;
      requests.push_back(std::move(req));
      break;
    }
    case Phase::Inference: {
      for (int seat : state_.alive)
        requests.push_back(ballot_request(RequestKind::InferenceRequest, seat,
                                          minus_seat(state_.alive, seat)));
      break;
    }
    case Phase::OfficialVote: {
      for (int seat : state_.alive)
        requests.push_back(ballot_request(RequestKind::OfficialBallot, seat, state_.alive));
      break;
    }
    case Phase::TieDebate: {
      if (debate_cursor_ < debate_queue_.size()) {
        ActionRequest req;
        req.kind = RequestKind::Speech;
        req.seat = debate_queue_[debate_cursor_];
        requests.push_back(std::move(req));
      }
      break;
    }
    case Phase::TiebreakVote: {
      for (int seat : state_.alive)
        requests.push_back(ballot_request(RequestKind::TiebreakBallot, seat, tie_seats_));
      break;
    }
    default:
      break;
  }
  return requests;
}

void Game::validate_batch(const std::vector<AgentResponse>& responses) const {
  auto pending = pending_requests();
  if (pending.empty()) throw EngineError("no pending requests");
  std::map<std::pair<int, int>, const ActionRequest*> by_key;
  for (const auto& req : pending)
    by_key[{req.seat, static_cast<int>(req.kind)}] = &req;

  std::set<std::pair<int, int>> seen;
  for (const auto& r : responses) {
    auto key = std::make_pair(r.seat, static_cast<int>(r.kind));
    auto it = by_key.find(key);
    if (it == by_key.end())
      throw EngineError(std::string("unexpected response ") + request_kind_name(r.kind) +
                        " from seat " + std::to_string(r.seat));
    if (!seen.insert(key).second)
      throw EngineError(std::string("duplicate response ") + request_kind_name(r.kind) +
                        " from seat " + std::to_string(r.seat));
    validate_one(r, *it->second);
  }
  for (const auto& req : pending) {
    if (!seen.count({req.seat, static_cast<int>(req.kind)}))
      throw EngineError(std::string("missing response: ") + request_kind_name(req.kind) +
                        " from seat " + std::to_string(req.seat));
  }
}

void Game::validate_one(const AgentResponse& r, const ActionRequest& req) const {
  auto illegal = [&](int target) {
    return EngineError(std::string("illegal target ") + std::to_string(target) + " for " +
                       request_kind_name(req.kind) + " from seat " + std::to_string(req.seat) +
                       "; legal targets: " + join_seats(req.legal_targets));
  };
  auto require_target_in_legal = [&](const std::optional<int>& target, bool required) {
    if (!target) {
      if (required)
        throw EngineError(std::string("response ") + request_kind_name(req.kind) +
                          " from seat " + std::to_string(req.seat) + " needs a target");
      return;
    }
    if (!req.legal_targets.count(*target)) throw illegal(*target);
  };

  switch (req.kind) {
    case RequestKind::WolfProposal:
    case RequestKind::GuardTarget:
    case RequestKind::SeerTarget:
      require_target_in_legal(r.target, /*required=*/true);
      break;
    case RequestKind::WitchDecision:
      if (r.heal && !req.can_heal) throw EngineError("healing potion not available");
      if (r.poison && !req.can_poison) throw EngineError("poison not available");
      if (r.heal && r.poison && !state_.config.witch_both_potions_same_night)
        throw EngineError("witch may not use both potions in one night");
      if (r.poison && !req.legal_targets.count(*r.poison)) throw illegal(*r.poison);
      break;
    case RequestKind::HunterShot:
      require_target_in_legal(r.target, /*required=*/false);
      break;
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot:
      require_target_in_legal(r.target, /*required=*/false);
      break;
    case RequestKind::Speech:
      break;
    case RequestKind::SheriffSummaryRequest:
      if (!r.recommended)
        throw EngineError("sheriff summary needs a recommended seat");
      if (!req.legal_targets.count(*r.recommended)) throw illegal(*r.recommended);
      break;
    case RequestKind::InferenceRequest: {
      for (const auto& [target, camp] : r.claims)
        if (!req.legal_targets.count(target)) throw illegal(target);
      for (int target : req.legal_targets)
        if (!r.claims.count(target))
          throw EngineError("inference from seat " + std::to_string(req.seat) +
                            " misses a claim for seat " + std::to_string(target));
      break;
    }
    case RequestKind::SpeakingOrderChoice:
      require_target_in_legal(r.start, /*required=*/true);
      break;
  }
}

std::vector<GameEvent> Game::submit(const std::vector<AgentResponse>& responses) {
  if (finished()) throw EngineError("game is over");
  validate_batch(responses);

  std::vector<AgentResponse> sorted = responses;
  std::sort(sorted.begin(), sorted.end(),
            [](const AgentResponse& a, const AgentResponse& b) { return a.seat < b.seat; });

  const std::size_t before = events_.size();
  for (const auto& r : sorted)
    if (r.via_fallback)
      push(GameEvent::fallback(state_.round, r.seat, request_kind_name(r.kind)));

  if (state_.pending_hunter) {
    apply_hunter(sorted.front());
  } else {
    switch (state_.phase) {
      case Phase::Night:
        if (!night_.main_collected)
          apply_night_main(std::move(sorted));
        else
          apply_witch(sorted.front());
        break;
      case Phase::Election:
        apply_election(std::move(sorted));
        break;
      case Phase::Speeches:
        if (order_pending_)
          apply_speaking_order(sorted.front());
        else
          apply_speech(sorted.front());
        break;
      case Phase::PseudoVote:
        apply_pseudo_vote(std::move(sorted));
        break;
      case Phase::SheriffSummary:
        apply_sheriff_summary(sorted.front());
        break;
      case Phase::Inference:
        apply_inference(std::move(sorted));
        break;
      case Phase::OfficialVote:
        apply_exile_vote(std::move(sorted), /*tiebreak=*/false);
        break;
      case Phase::TieDebate:
        apply_speech(sorted.front());
        break;
      case Phase::TiebreakVote:
        apply_exile_vote(std::move(sorted), /*tiebreak=*/true);
        break;
      default:
        throw EngineError(std::string("phase ") + phase_name(state_.phase) +
                          " awaits no responses");
    }
  }
  return {events_.begin() + static_cast<std::ptrdiff_t>(before), events_.end()};
}

void Game::apply_night_main(std::vector<AgentResponse> sorted) {
  for (const auto& r : sorted) {
    switch (r.kind) {
      case RequestKind::WolfProposal:
        night_.actions.wolf_proposals[r.seat] = *r.target;
        push(GameEvent::night_action_of(state_.round, NightActionKind::WolfProposal,
                                        r.seat, r.target));
        break;
      case RequestKind::GuardTarget:
        night_.actions.guard_target = r.target;
        push(GameEvent::night_action_of(state_.round, NightActionKind::Guard, r.seat,
                                        r.target));
        break;
      case RequestKind::SeerTarget:
        night_.actions.seer_target = r.target;
        push(GameEvent::night_action_of(state_.round, NightActionKind::SeerCheck, r.seat,
                                        r.target));
        break;
      default:
        throw EngineError("unexpected kind in night batch");
    }
  }
  std::set<int> alive_wolves = state_.alive_wolves();
  std::vector<int> wolves(alive_wolves.begin(), alive_wolves.end());
  night_.victim = resolve_wolf_target(night_.actions.wolf_proposals, wolves);
  night_.main_collected = true;

  if (night_.actions.seer_target) {
    int seer = *state_.seat_of(Role::Seer);
    int target = *night_.actions.seer_target;
    push(GameEvent::seer_result(state_.round, seer, target,
                                state_.role(target) == Role::Werewolf));
  }

  auto witch = state_.seat_of(Role::Witch);
  bool witch_acts = witch.has_value() &&
                    (state_.witch_heal_available || state_.witch_poison_available);
  if (!witch_acts) {
    night_.witch_collected = true;
    resolve_night_and_dawn();
  }
}

void Game::apply_witch(const AgentResponse& r) {
  if (r.heal) {
    night_.actions.witch_heal = true;
    push(GameEvent::night_action_of(state_.round, NightActionKind::WitchHeal, r.seat,
                                    night_.victim));
  }
  if (r.poison) {
    night_.actions.witch_poison_target = r.poison;
    push(GameEvent::night_action_of(state_.round, NightActionKind::WitchPoison, r.seat,
                                    r.poison));
  }
  if (!r.heal && !r.poison)
    push(GameEvent::night_action_of(state_.round, NightActionKind::WitchPass, r.seat,
                                    std::nullopt));
  night_.witch_collected = true;
  resolve_night_and_dawn();
}

void Game::resolve_night_and_dawn() {
  NightOutcome outcome = resolve_night(state_, night_.actions);
  if (night_.actions.witch_heal) state_.witch_heal_available = false;
  if (night_.actions.witch_poison_target) state_.witch_poison_available = false;
  state_.last_guard_target = night_.actions.guard_target;

  state_.phase = Phase::Dawn;
  dawn_deaths_ = outcome.deaths;
  std::sort(dawn_deaths_.begin(), dawn_deaths_.end());
  for (const auto& [seat, cause] : dawn_deaths_) apply_death(seat, cause);

  if (check_and_record_win()) return;

  for (const auto& [seat, cause] : dawn_deaths_) {
    bool window_cause = cause == DeathCause::WolfKill ||
                        (cause == DeathCause::Poison &&
                         state_.config.hunter_shoots_when_poisoned);
    if (state_.role(seat) == Role::Hunter && window_cause &&
        state_.hunter_shot_available) {
      state_.pending_hunter = seat;
      hunter_cause_ = cause;
      hunter_return_ = HunterReturn::DayStart;
      return;
    }
  }
  enter_day_start();
}

void Game::apply_hunter(const AgentResponse& r) {
  int shooter = *state_.pending_hunter;
  state_.pending_hunter.reset();
  push(GameEvent::hunter_shot(state_.round, shooter, r.target));
  if (r.target) {
    state_.hunter_shot_available = false;
    apply_death(*r.target, DeathCause::HunterShot);
    if (check_and_record_win()) return;
  }
  after_hunter_resolved();
}

void Game::after_hunter_resolved() {
  if (hunter_return_ == HunterReturn::DayStart)
    enter_day_start();
  else
    finish_day();
}

void Game::enter_day_start() {
  if (state_.round == 1 && state_.config.sheriff_enabled && !election_done_) {
    state_.phase = Phase::Election;
    election_stage_ = 0;
    return;
  }
  enter_speeches();
}

void Game::apply_election(std::vector<AgentResponse> sorted) {
  VoteRound round = collect_ballots(sorted, VoteKind::Election, election_stage_,
                                    /*weighted=*/false);
  TallyResult tally = tally_votes(round);
  auto elect = [&](int seat) {
    state_.sheriff = seat;
    push(GameEvent::sheriff_elected(state_.round, seat));
    election_done_ = true;
    enter_speeches();
  };
  if (election_stage_ == 0) {
    if (tally.is_winner()) {
      elect(tally.winner);
    } else if (tally.is_tied()) {
      // One runoff restricted to the tied seats.
      election_tied_ = tally.tied;
      election_stage_ = 1;
    } else {
      // Every voter abstained: the town elects nobody.
      election_done_ = true;
      enter_speeches();
    }
    return;
  }
  if (tally.is_winner())
    elect(tally.winner);
  else if (tally.is_tied())
    elect(*tally.tied.begin());  // persistent tie: lowest tied seat
  else
    elect(*election_tied_.begin());
}

void Game::enter_speeches() {
  state_.phase = Phase::Speeches;
  speaking_queue_.clear();
  speech_cursor_ = 0;
  if (sheriff_alive()) {
    order_pending_ = true;
    return;
  }
  // Without a sheriff: ascending seats starting after the first announced
  // death of this dawn, or from seat 0 when the night was peaceful.
  int start_from = dawn_deaths_.empty() ? 0 : dawn_deaths_.front().first + 1;
  std::vector<int> alive(state_.alive.begin(), state_.alive.end());
  auto it = std::lower_bound(alive.begin(), alive.end(), start_from);
  std::size_t offset = static_cast<std::size_t>(it - alive.begin()) % alive.size();
  std::rotate(alive.begin(), alive.begin() + static_cast<std::ptrdiff_t>(offset),
              alive.end());
  speaking_queue_ = std::move(alive);
}

void Game::build_speaking_queue(int start, bool ascending) {
  std::vector<int> alive(state_.alive.begin(), state_.alive.end());
  if (!ascending) std::reverse(alive.begin(), alive.end());
  auto it = std::find(alive.begin(), alive.end(), start);
  std::rotate(alive.begin(), it, alive.end());
  speaking_queue_ = std::move(alive);
  speech_cursor_ = 0;
}

void Game::apply_speaking_order(const AgentResponse& r) {
  push(GameEvent::speaking_order(state_.round, r.seat, *r.start, r.ascending));
  order_pending_ = false;
  build_speaking_queue(*r.start, r.ascending);
}

void Game::apply_speech(const AgentResponse& r) {
  push(GameEvent::speech(state_.round, r.seat, r.text));
  if (state_.phase == Phase::Speeches) {
    ++speech_cursor_;
    if (speech_cursor_ >= speaking_queue_.size()) enter_after_speeches();
  } else {
    ++debate_cursor_;
    if (debate_cursor_ >= debate_queue_.size()) state_.phase = Phase::TiebreakVote;
  }
}

void Game::enter_after_speeches() {
  state_.phase = sheriff_alive() ? Phase::PseudoVote : Phase::Inference;
}

void Game::apply_pseudo_vote(std::vector<AgentResponse> sorted) {
  VoteRound round = collect_ballots(sorted, VoteKind::Pseudo, 0, /*weighted=*/false);
  pseudo_tallies_ = tally_votes(round).totals;
  state_.phase = Phase::SheriffSummary;
}

void Game::apply_sheriff_summary(const AgentResponse& r) {
  push(GameEvent::sheriff_summary(state_.round, r.seat, *r.recommended, r.text));
  state_.phase = Phase::Inference;
}

void Game::apply_inference(std::vector<AgentResponse> sorted) {
  for (const auto& r : sorted)
    push(GameEvent::identity_inference(state_.round, r.seat, r.claims));
  state_.phase = Phase::OfficialVote;
}

void Game::apply_exile_vote(std::vector<AgentResponse> sorted, bool tiebreak) {
  VoteKind kind = tiebreak ? VoteKind::Tiebreak : VoteKind::Official;
  VoteRound round = collect_ballots(sorted, kind, 0, /*weighted=*/true);
  TallyResult tally = tally_votes(round);

  if (tally.is_winner()) {
    run_exile(tally.winner);
    return;
  }
  if (tally.is_tied() && !tiebreak) {
    // Tied seats each give one debate speech, then a restricted revote.
    tie_seats_ = tally.tied;
    debate_queue_.assign(tie_seats_.begin(), tie_seats_.end());
    debate_cursor_ = 0;
    state_.phase = Phase::TieDebate;
    return;
  }
  // All abstained, or a second tie: nobody is exiled today.
  finish_day();
}

void Game::run_exile(int seat) {
  push(GameEvent::exile(state_.round, seat));
  apply_death(seat, DeathCause::Exile);
  if (check_and_record_win()) return;
  if (state_.role(seat) == Role::Hunter && state_.hunter_shot_available) {
    state_.pending_hunter = seat;
    hunter_cause_ = DeathCause::Exile;
    hunter_return_ = HunterReturn::Dusk;
    state_.phase = Phase::Dusk;
    return;
  }
  finish_day();
}

void Game::apply_death(int seat, DeathCause cause) {
  state_.alive.erase(seat);
  push(GameEvent::death(state_.round, seat, cause));
  if (state_.sheriff && *state_.sheriff == seat) state_.sheriff.reset();  // badge destroyed
}

bool Game::check_and_record_win() {
  auto w = check_win(state_);
  if (!w) return false;
  winner_ = w;
  push(GameEvent::game_over(state_.round, *w, state_.round));
  state_.phase = Phase::Finished;
  return true;
}

void Game::finish_day() {
  state_.round += 1;
  state_.phase = Phase::Night;
  night_ = NightBuffer{};
  dawn_deaths_.clear();
  pseudo_tallies_.clear();
  tie_seats_.clear();
  debate_queue_.clear();
  debate_cursor_ = 0;
}

VoteRound Game::collect_ballots(const std::vector<AgentResponse>& sorted, VoteKind kind,
                                int stage, bool weighted) {
  VoteRound round;
  round.kind = kind;
  for (const auto& r : sorted) {
    double weight =
        (weighted && state_.sheriff && *state_.sheriff == r.seat) ? 1.5 : 1.0;
    round.ballots[r.seat] = r.target;
    round.weights[r.seat] = weight;
    push(GameEvent::vote_cast(state_.round, kind, stage, r.seat, r.target, weight));
  }
  return round;
}

}  // namespace wolfarena
