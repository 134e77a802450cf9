#include "wolfarena/metrics/logview.hpp"

#include <algorithm>

#include "wolfarena/engine/state.hpp"

namespace wolfarena {

GameLogView::GameLogView(GameLog log) : log_(std::move(log)) {
  roles_.assign(static_cast<std::size_t>(log_.header.config.n_players), Role::Villager);
  index();
}

void GameLogView::index() {
  std::vector<bool> role_seen(roles_.size(), false);

  // Per-round night bookkeeping for the guard indexes.
  std::map<int, std::map<int, int>> wolf_proposals_by_round;  // round -> wolf -> target
  std::map<int, std::pair<int, int>> guard_by_round;          // round -> (guard, target)
  std::map<int, std::set<int>> night_deaths_by_round;
  std::map<int, std::set<int>> wolf_kill_deaths_by_round;

  for (const auto& ev : log_.events) {
    switch (ev.kind) {
      case EventKind::RoleAssigned: {
        auto seat = static_cast<std::size_t>(ev.seat);
        if (seat >= roles_.size()) throw EngineError("role_assigned seat out of range");
        if (role_seen[seat]) throw EngineError("duplicate role_assigned");
        roles_[seat] = ev.role;
        role_seen[seat] = true;
        break;
      }
      case EventKind::NightAction:
        switch (ev.night_action) {
          case NightActionKind::WolfProposal:
            wolf_proposals_by_round[ev.round][ev.seat] = *ev.target;
            break;
          case NightActionKind::Guard:
            guard_by_round[ev.round] = {ev.seat, *ev.target};
            break;
          case NightActionKind::SeerCheck:
            seer_checks_[ev.seat].emplace_back(ev.round, *ev.target);
            break;
          case NightActionKind::WitchHeal:
            witch_heal_targets_[ev.seat] = *ev.target;
            break;
          case NightActionKind::WitchPoison:
            witch_poison_targets_[ev.seat] = *ev.target;
            break;
          case NightActionKind::WitchPass:
            break;
        }
        break;
      case EventKind::Death:
        deaths_by_seat_[ev.seat] = {ev.seat, ev.cause, ev.round};
        if (ev.cause == DeathCause::WolfKill || ev.cause == DeathCause::Poison)
          night_deaths_by_round[ev.round].insert(ev.seat);
        if (ev.cause == DeathCause::WolfKill)
          wolf_kill_deaths_by_round[ev.round].insert(ev.seat);
        break;
      case EventKind::SheriffElected:
        sheriff_seat_ = ev.seat;
        break;
      case EventKind::SheriffSummary:
        summaries_.push_back({ev.round, ev.seat, *ev.recommended});
        break;
      case EventKind::IdentityInference:
        inferences_.push_back({ev.round, ev.seat, ev.claims});
        break;
      case EventKind::VoteCast: {
        if (vote_rounds_.empty() || vote_rounds_.back().round != ev.round ||
            vote_rounds_.back().kind != ev.vote || vote_rounds_.back().stage != ev.stage)
          vote_rounds_.push_back({ev.round, ev.vote, ev.stage, {}});
        vote_rounds_.back().ballots[ev.seat] = {ev.target, ev.weight};
        break;
      }
      case EventKind::HunterShot:
        if (ev.target) hunter_shots_[ev.seat] = {ev.round, *ev.target};
        break;
      case EventKind::GameOver:
        if (winner_) throw EngineError("more than one game_over event");
        winner_ = ev.winner;
        total_rounds_ = ev.total_rounds;
        break;
      default:
        break;
    }
  }

  for (std::size_t seat = 0; seat < roles_.size(); ++seat) {
    if (!role_seen[seat]) throw EngineError("missing role_assigned for a seat");
    if (roles_[seat] == Role::Werewolf) wolf_seats_.push_back(static_cast<int>(seat));
  }

  // Guard attempts need the resolved wolf victim per night, recomputed from
  // the proposals exactly the way the engine resolves them.
  for (const auto& [round, guard] : guard_by_round) {
    auto [guard_seat, target] = guard;
    GuardAttempt attempt;
    attempt.round = round;
    attempt.target = target;
    attempt.target_good = camp(target) == Camp::Good;
    auto pit = wolf_proposals_by_round.find(round);
    if (pit != wolf_proposals_by_round.end() && !pit->second.empty()) {
      std::vector<int> wolves;
      for (const auto& [wolf, t] : pit->second) wolves.push_back(wolf);
      int victim = resolve_wolf_target(pit->second, wolves);
      bool victim_killed = wolf_kill_deaths_by_round[round].count(victim) > 0;
      attempt.prevented_kill = (victim == target) && !victim_killed;
    }
    attempt.target_died_at_night = night_deaths_by_round[round].count(target) > 0;
    guard_attempts_[guard_seat].push_back(attempt);
  }
}

std::set<int> GameLogView::winner_seats() const {
  std::set<int> seats;
  if (!winner_) return seats;
  for (int seat = 0; seat < n_players(); ++seat)
    if (camp(seat) == *winner_) seats.insert(seat);
  return seats;
}

std::optional<DeathRecord> GameLogView::death_of(int seat) const {
  auto it = deaths_by_seat_.find(seat);
  if (it == deaths_by_seat_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GameLogView::seats_with_role(Role r) const {
  std::vector<int> seats;
  for (int seat = 0; seat < n_players(); ++seat)
    if (role(seat) == r) seats.push_back(seat);
  return seats;
}

const std::vector<std::pair<int, int>>& GameLogView::seer_checks(int seat) const {
  static const std::vector<std::pair<int, int>> empty;
  auto it = seer_checks_.find(seat);
  return it == seer_checks_.end() ? empty : it->second;
}

const std::vector<GuardAttempt>& GameLogView::guard_attempts(int seat) const {
  static const std::vector<GuardAttempt> empty;
  auto it = guard_attempts_.find(seat);
  return it == guard_attempts_.end() ? empty : it->second;
}

std::optional<int> GameLogView::witch_heal_target(int seat) const {
  auto it = witch_heal_targets_.find(seat);
  if (it == witch_heal_targets_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> GameLogView::witch_poison_target(int seat) const {
  auto it = witch_poison_targets_.find(seat);
  if (it == witch_poison_targets_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<int, int>> GameLogView::hunter_shot(int seat) const {
  auto it = hunter_shots_.find(seat);
  if (it == hunter_shots_.end()) return std::nullopt;
  return it->second;
}

}  // namespace wolfarena
