// The line-oriented answer grammar. Agents reply in free text; the parser
// looks for keyword-prefixed lines (case-insensitive, first match wins), so
// surrounding prose from chat models is harmless:
//
//   KILL: <seat>                      wolf proposal
//   GUARD: <seat>                     guard target
//   CHECK: <seat>                     seer target
//   HEAL: YES|NO / POISON: <seat>|NONE   witch decision
//   SHOOT: <seat>|NONE                hunter shot
//   VOTE: <seat>|ABSTAIN              any ballot
//   RECOMMEND: <seat> + free text     sheriff summary
//   seat<k>=werewolf|good per target  identity inference
//   START: <seat> / DIRECTION: UP|DOWN   speaking order
//   (speeches: the whole reply, optionally after "SAY:")
//
// A malformed reply is re-queried up to kMaxRequeries times; after that the
// caller falls back to the deterministic legal default and the engine logs
// the substitution.
#pragma once

#include <string>
#include <variant>

#include "wolfarena/engine/request.hpp"

namespace wolfarena {

struct ParseError {
  std::string reason;
};

using ParseOutcome = std::variant<AgentResponse, ParseError>;

inline bool parse_ok(const ParseOutcome& outcome) {
  return std::holds_alternative<AgentResponse>(outcome);
}

ParseOutcome parse_response(const std::string& raw, const ActionRequest& request);

// Canonical answer text for a well-formed response;
// parse_response(render_response(r), request) == r.
std::string render_response(const AgentResponse& response);

// Legal defaults after failed re-queries: abstain for ballots, the
// lowest-seat legal target for night actions, pass/decline for potions and
// the shot, all-good claims for inference. Marks the response via_fallback.
AgentResponse deterministic_fallback(const ActionRequest& request);

inline constexpr int kMaxRequeries = 2;

}  // namespace wolfarena
