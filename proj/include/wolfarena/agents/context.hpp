// Per-seat views of the game. A context contains exactly what that seat is
// allowed to know: the public transcript rendered from the event log, plus
// its own private observations (werewolf teammates, seer checks, the witch's
// victim briefing). Nothing belonging to another seat ever enters it.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfarena/engine/request.hpp"
#include "wolfarena/engine/state.hpp"
#include "wolfarena/memory/pool.hpp"

namespace wolfarena {

struct SeerObservation {
  int round = 0;
  int target = -1;
  bool is_werewolf = false;
};

struct AgentContext {
  int seat = -1;
  Role role = Role::Villager;
  Camp camp = Camp::Good;
  int round = 1;
  Phase phase = Phase::Night;
  std::set<int> alive;
  std::optional<int> sheriff;

  std::vector<std::string> transcript;  // visible lines, occurrence order

  std::vector<int> wolf_teammates;            // only when role == Werewolf
  std::vector<SeerObservation> seer_results;  // only when role == Seer
  std::optional<int> witch_victim;            // only on the witch's decision

  ActionRequest request;
  std::vector<Experience> retrieved;
  std::string history_summary;
};

// Renders one event as the given viewer sees it; nullopt when invisible.
std::optional<std::string> render_event_for(const GameEvent& ev, int viewer,
                                            Role viewer_role);

std::vector<std::string> visible_transcript(int seat, Role role,
                                            const std::vector<GameEvent>& history);

AgentContext build_context(const GameState& state, int seat,
                           const std::vector<GameEvent>& history,
                           const ActionRequest& request,
                           std::vector<Experience> retrieved = {},
                           std::string history_summary = {});

}  // namespace wolfarena
