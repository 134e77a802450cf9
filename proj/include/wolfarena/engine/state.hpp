// Authoritative hidden-role state plus the night resolution primitives.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wolfarena/engine/types.hpp"

namespace wolfarena {

// One night plus one day make a round. The cursor walks the phases below;
// Election only exists in round 1 of sheriff games, the pseudo-vote /
// summary pair only while a sheriff holds the badge.
enum class Phase {
  Night,
  Dawn,
  Election,
  Speeches,
  PseudoVote,
  SheriffSummary,
  Inference,
  OfficialVote,
  TieDebate,
  TiebreakVote,
  Dusk,
  Finished,
};

const char* phase_name(Phase p);

struct GameState {
  GameConfig config;
  std::vector<Role> roles;    // per seat, fixed at deal time
  std::set<int> alive;
  int round = 1;
  Phase phase = Phase::Night;
  std::optional<int> sheriff;            // badge destroyed on death, no transfer
  bool witch_heal_available = true;
  bool witch_poison_available = true;
  std::optional<int> last_guard_target;  // previous night only
  bool hunter_shot_available = true;
  std::optional<int> pending_hunter;     // seat with an open shot window
  std::uint64_t rng_state = 0;

  Camp camp(int seat) const { return camp_of(roles.at(static_cast<std::size_t>(seat))); }
  Role role(int seat) const { return roles.at(static_cast<std::size_t>(seat)); }
  bool is_alive(int seat) const { return alive.count(seat) > 0; }

  std::set<int> alive_wolves() const;
  std::set<int> alive_with_role(Role r) const;
  std::optional<int> seat_of(Role r) const;  // lowest alive seat with the role
};

// Good wins when no werewolf survives; the wolves win when they strictly
// outnumber the surviving good camp (>= when wolf_win_on_equal is set).
std::optional<Camp> check_win(const GameState& state);

// All the night decisions of one round, collected before resolution.
struct NightActions {
  std::map<int, int> wolf_proposals;   // wolf seat -> target
  std::optional<int> guard_target;
  std::optional<int> seer_target;
  bool witch_heal = false;
  std::optional<int> witch_poison_target;
};

struct NightOutcome {
  int wolf_victim = -1;
  bool victim_survived = false;
  std::vector<std::pair<int, DeathCause>> deaths;  // announcement order
  std::optional<std::pair<int, bool>> seer_verdict;  // target, is_werewolf
};

// Guard choices: every alive seat except last night's target. Self-guard is
// allowed. Throws if the guard is dead or it is not night.
std::set<int> legal_guard_targets(const GameState& state);

// Wolf consensus: a strict majority proposal wins outright; otherwise the
// proposal of the lowest-seat alive wolf whose pick is among the modal
// (most proposed) targets. Deterministic and independent of arrival order.
int resolve_wolf_target(const std::map<int, int>& proposals,
                        const std::vector<int>& alive_wolves);

// Resolution order: guard, wolf kill, seer, witch. The guarded or healed
// victim survives; a victim both guarded and healed survives or dies
// according to guard_save_interaction. Poison ignores the guard.
NightOutcome resolve_night(const GameState& state, const NightActions& actions);

}  // namespace wolfarena
