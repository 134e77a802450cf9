// Scripted baseline agents. Both are pure functions of
// (request, context, seed): the random policy draws uniformly over legal
// options from a seed-derived stream, the heuristic policy follows fixed
// rules (the seer checks the lowest unchecked seat, wolves target the
// lowest-seat non-wolf, ballots follow the agent's own inference). They let
// the engine and the whole pipeline run with no model at all.
#pragma once

#include "wolfarena/agents/context.hpp"

namespace wolfarena {

enum class BaselineKind { Random, Heuristic };

AgentResponse baseline_policy(BaselineKind kind, const ActionRequest& request,
                              const AgentContext& context, std::uint64_t seed);

// The heuristic agent's camp claims, exposed so its ballot rule ("vote the
// lowest seat you claim is a wolf") is testable on its own.
std::map<int, Camp> heuristic_claims(const ActionRequest& request,
                                     const AgentContext& context);

}  // namespace wolfarena
