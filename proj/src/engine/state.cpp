#include "wolfarena/engine/state.hpp"

#include <algorithm>

namespace wolfarena {

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Night: return "night";
    case Phase::Dawn: return "dawn";
    case Phase::Election: return "election";
    case Phase::Speeches: return "speeches";
    case Phase::PseudoVote: return "pseudo_vote";
    case Phase::SheriffSummary: return "sheriff_summary";
    case Phase::Inference: return "inference";
    case Phase::OfficialVote: return "official_vote";
    case Phase::TieDebate: return "tie_debate";
    case Phase::TiebreakVote: return "tiebreak_vote";
    case Phase::Dusk: return "dusk";
    case Phase::Finished: return "finished";
  }
  return "?";
}

std::set<int> GameState::alive_wolves() const { return alive_with_role(Role::Werewolf); }

std::set<int> GameState::alive_with_role(Role r) const {
  std::set<int> seats;
  for (int seat : alive)
    if (role(seat) == r) seats.insert(seat);
  return seats;
}

std::optional<int> GameState::seat_of(Role r) const {
  auto seats = alive_with_role(r);
  if (seats.empty()) return std::nullopt;
  return *seats.begin();
}

std::optional<Camp> check_win(const GameState& state) {
  int wolves = 0;
  int good = 0;
  for (int seat : state.alive)
    (state.camp(seat) == Camp::Wolf ? wolves : good)++;
  if (wolves == 0) return Camp::Good;
  if (wolves > good) return Camp::Wolf;
  if (state.config.wolf_win_on_equal && wolves == good) return Camp::Wolf;
  return std::nullopt;
}

std::set<int> legal_guard_targets(const GameState& state) {
  auto guard = state.seat_of(Role::Guard);
  if (!guard) throw EngineError("no alive guard");
  if (state.phase != Phase::Night) throw EngineError("guard acts only at night");
  std::set<int> targets = state.alive;
  if (state.last_guard_target) targets.erase(*state.last_guard_target);
  return targets;
}

int resolve_wolf_target(const std::map<int, int>& proposals,
                        const std::vector<int>& alive_wolves) {
  if (proposals.empty()) throw EngineError("no wolf proposals");
  std::map<int, int> counts;
  for (const auto& [wolf, target] : proposals) counts[target]++;
  int best = 0;
  for (const auto& [target, n] : counts) best = std::max(best, n);
  std::set<int> modal;
  for (const auto& [target, n] : counts)
    if (n == best) modal.insert(target);
  if (modal.size() == 1) return *modal.begin();
  for (int wolf : alive_wolves) {
    auto it = proposals.find(wolf);
    if (it != proposals.end() && modal.count(it->second)) return it->second;
  }
  return *modal.begin();  // unreachable: every modal target has a proposer
}

NightOutcome resolve_night(const GameState& state, const NightActions& actions) {
  // Invariant checks mirror the request legality rules; they catch callers
  // that bypass the engine's submit path.
  if (actions.guard_target && state.last_guard_target &&
      *actions.guard_target == *state.last_guard_target)
    throw EngineError("guard repeated last night's target");
  if (actions.witch_heal && !state.witch_heal_available)
    throw EngineError("healing potion already used");
  if (actions.witch_poison_target && !state.witch_poison_available)
    throw EngineError("poison already used");
  if (actions.witch_heal && actions.witch_poison_target &&
      !state.config.witch_both_potions_same_night)
    throw EngineError("witch may not use both potions in one night");

  NightOutcome out;
  std::set<int> alive_wolves = state.alive_wolves();
  std::vector<int> wolves(alive_wolves.begin(), alive_wolves.end());
  out.wolf_victim = resolve_wolf_target(actions.wolf_proposals, wolves);

  bool guarded = actions.guard_target && *actions.guard_target == out.wolf_victim;
  bool healed = actions.witch_heal;
  if (guarded && healed)
    out.victim_survived =
        state.config.guard_save_interaction == GuardSaveInteraction::Survive;
  else
    out.victim_survived = guarded || healed;

  if (!out.victim_survived) out.deaths.emplace_back(out.wolf_victim, DeathCause::WolfKill);
  if (actions.witch_poison_target) {
    int poisoned = *actions.witch_poison_target;
    bool already_dead = std::any_of(out.deaths.begin(), out.deaths.end(),
                                    [&](const auto& d) { return d.first == poisoned; });
    if (!already_dead) out.deaths.emplace_back(poisoned, DeathCause::Poison);
  }
  if (actions.seer_target)
    out.seer_verdict = {{*actions.seer_target,
                         state.role(*actions.seer_target) == Role::Werewolf}};
  return out;
}

}  // namespace wolfarena
