// The decision surface between the engine and agents. The engine emits
// ActionRequests describing exactly what it awaits; agents answer with
// AgentResponses. Both are plain tagged records so they serialize and
// compare trivially.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "wolfarena/engine/event.hpp"

namespace wolfarena {

enum class RequestKind {
  WolfProposal,
  GuardTarget,
  SeerTarget,
  WitchDecision,
  HunterShot,
  ElectionBallot,
  Speech,
  PseudoBallot,
  SheriffSummaryRequest,
  InferenceRequest,
  OfficialBallot,
  TiebreakBallot,
  SpeakingOrderChoice,
};

const char* request_kind_name(RequestKind k);
bool is_ballot(RequestKind k);
VoteKind ballot_vote_kind(RequestKind k);

struct ActionRequest {
  RequestKind kind = RequestKind::Speech;
  int seat = -1;                 // responder
  std::set<int> legal_targets;   // nonempty for target-kinds; abstain is separate

  // Witch extras: the wolves' victim tonight and which potions remain.
  std::optional<int> victim;
  bool can_heal = false;
  bool can_poison = false;
  bool can_use_both = false;  // rule-variant flag: both potions in one night

  // Sheriff summary extras: the pseudo-vote tallies to summarize.
  std::map<int, double> first_round_tallies;
};

struct AgentResponse {
  RequestKind kind = RequestKind::Speech;
  int seat = -1;

  std::optional<int> target;     // ballots (nullopt = abstain), night picks,
                                 // hunter shot (nullopt = decline)
  bool heal = false;             // witch
  std::optional<int> poison;     // witch
  std::string text;              // speech / summary body
  std::optional<int> recommended;  // sheriff summary
  std::map<int, Camp> claims;    // inference: other alive seat -> camp
  std::optional<int> start;      // speaking order
  bool ascending = true;         // speaking order direction

  // Set when the response came from the deterministic fallback after failed
  // re-queries; the engine logs it so metrics can audit or exclude it.
  bool via_fallback = false;

  bool operator==(const AgentResponse&) const = default;
};

}  // namespace wolfarena
