// Append-only game events. The event stream is the single source of truth:
// replay and every metric are computed from it alone, so each agent decision
// and each engine resolution shows up here.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wolfarena/engine/types.hpp"

namespace wolfarena {

enum class EventKind {
  RoleAssigned,
  NightAction,
  SeerResult,
  Death,
  SheriffElected,
  SpeakingOrder,
  Speech,
  SheriffSummary,
  IdentityInference,
  VoteCast,
  Exile,
  HunterShot,
  Fallback,
  GameOver,
};

const char* event_kind_name(EventKind k);
EventKind event_kind_from_name(const std::string& name);

// Spellings fixed by the log schema (schema_version 1).
enum class NightActionKind { WolfProposal, Guard, SeerCheck, WitchHeal, WitchPoison, WitchPass };
const char* night_action_name(NightActionKind k);
NightActionKind night_action_from_name(const std::string& name);

enum class VoteKind { Election, Pseudo, Official, Tiebreak };
const char* vote_kind_name(VoteKind k);
VoteKind vote_kind_from_name(const std::string& name);

// One record of the tagged union. Only the fields meaningful for `kind` are
// serialized; everything else stays at its default.
struct GameEvent {
  EventKind kind = EventKind::RoleAssigned;
  int round = 1;

  int seat = -1;                    // subject seat / actor, depending on kind
  std::optional<int> target;        // absent = abstain / declined / no target
  Role role = Role::Villager;       // RoleAssigned
  NightActionKind night_action = NightActionKind::WolfProposal;
  bool is_werewolf = false;         // SeerResult verdict
  DeathCause cause = DeathCause::WolfKill;
  std::string text;                 // Speech / SheriffSummary / Fallback request name
  std::optional<int> recommended;   // SheriffSummary
  std::map<int, Camp> claims;       // IdentityInference
  VoteKind vote = VoteKind::Official;
  int stage = 0;                    // 0 first ballot round of the kind, 1 runoff
  double weight = 1.0;              // VoteCast
  bool ascending = true;            // SpeakingOrder direction
  std::optional<int> start;         // SpeakingOrder start seat
  Camp winner = Camp::Good;         // GameOver
  int total_rounds = 0;             // GameOver

  bool operator==(const GameEvent&) const = default;

  static GameEvent role_assigned(int round, int seat, Role role);
  static GameEvent night_action_of(int round, NightActionKind k, int actor,
                                   std::optional<int> target);
  static GameEvent seer_result(int round, int actor, int target, bool is_wolf);
  static GameEvent death(int round, int seat, DeathCause cause);
  static GameEvent sheriff_elected(int round, int seat);
  static GameEvent speaking_order(int round, int chooser, int start, bool ascending);
  static GameEvent speech(int round, int seat, std::string text);
  static GameEvent sheriff_summary(int round, int seat, int recommended, std::string text);
  static GameEvent identity_inference(int round, int seat, std::map<int, Camp> claims);
  static GameEvent vote_cast(int round, VoteKind vote, int stage, int voter,
                             std::optional<int> target, double weight);
  static GameEvent exile(int round, int seat);
  static GameEvent hunter_shot(int round, int actor, std::optional<int> target);
  static GameEvent fallback(int round, int seat, std::string request_name);
  static GameEvent game_over(int round, Camp winner, int total_rounds);
};

// Schema v1 line format: one JSON object per event, stable field names.
std::string event_to_json(const GameEvent& ev);
GameEvent event_from_json(const std::string& line);

}  // namespace wolfarena
