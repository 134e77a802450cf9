#include "wolfarena/agents/baseline.hpp"

#include <algorithm>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

namespace {

const char* kCannedSpeeches[] = {
    "I have nothing concrete yet; I am watching the votes.",
    "The night told us little. Let us hear everyone first.",
    "I am an ordinary villager. Judge me by my votes.",
    "Someone is steering the votes. Think about who benefits.",
    "I will follow the evidence, not the loudest voice.",
    "Yesterday's vote pattern looked coordinated to me.",
};

int pick(const std::set<int>& options, SplitMix64& rng) {
  auto it = options.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.below(options.size())));
  return *it;
}

AgentResponse random_policy(const ActionRequest& request, const AgentContext& context,
                            std::uint64_t seed) {
  AgentResponse r;
  r.kind = request.kind;
  r.seat = request.seat;
  // One fresh stream per decision: the transcript length advances with every
  // phase, so the key is unique per (seed, request) without any hidden state.
  SplitMix64 rng(mix_seed(mix_seed(seed, static_cast<std::uint64_t>(request.kind)),
                          static_cast<std::uint64_t>(request.seat),
                          context.transcript.size()));
  const auto& legal = request.legal_targets;
  switch (request.kind) {
    case RequestKind::WolfProposal:
    case RequestKind::GuardTarget:
    case RequestKind::SeerTarget:
      r.target = pick(legal, rng);
      break;
    case RequestKind::WitchDecision: {
      std::uint64_t options = 1 + (request.can_heal ? 1 : 0) +
                              (request.can_poison ? legal.size() : 0);
      std::uint64_t roll = rng.below(options);
      if (roll == 0) break;  // keep the potions
      if (request.can_heal && roll == 1) {
        r.heal = true;
        break;
      }
      auto it = legal.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(roll - 1 - (request.can_heal ? 1 : 0)));
      r.poison = *it;
      break;
    }
    case RequestKind::HunterShot: {
      std::uint64_t roll = rng.below(legal.size() + 1);
      if (roll > 0) {
        auto it = legal.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(roll - 1));
        r.target = *it;
      }
      break;
    }
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot: {
      std::uint64_t roll = rng.below(legal.size() + 1);  // +1 for abstain
      if (roll > 0) {
        auto it = legal.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(roll - 1));
        r.target = *it;
      }
      break;
    }
    case RequestKind::Speech:
      r.text = kCannedSpeeches[rng.below(std::size(kCannedSpeeches))];
      break;
    case RequestKind::SheriffSummaryRequest:
      r.recommended = pick(legal, rng);
      r.text = "The first vote was split; I recommend we settle on one target.";
      break;
    case RequestKind::InferenceRequest:
      for (int target : legal)
        r.claims.emplace(target, rng.below(2) == 0 ? Camp::Good : Camp::Wolf);
      break;
    case RequestKind::SpeakingOrderChoice:
      r.start = pick(legal, rng);
      r.ascending = rng.below(2) == 0;
      break;
  }
  return r;
}

}  // namespace

std::map<int, Camp> heuristic_claims(const ActionRequest& request,
                                     const AgentContext& context) {
  std::map<int, Camp> claims;
  for (int target : request.legal_targets) claims.emplace(target, Camp::Good);
  if (context.role == Role::Seer) {
    for (const auto& obs : context.seer_results)
      if (claims.count(obs.target))
        claims[obs.target] = obs.is_werewolf ? Camp::Wolf : Camp::Good;
  }
  // Werewolves claim everyone good: deception is the point.
  return claims;
}

AgentResponse baseline_policy(BaselineKind kind, const ActionRequest& request,
                              const AgentContext& context, std::uint64_t seed) {
  if (kind == BaselineKind::Random) return random_policy(request, context, seed);

  AgentResponse r;
  r.kind = request.kind;
  r.seat = request.seat;
  const auto& legal = request.legal_targets;
  int lowest = legal.empty() ? -1 : *legal.begin();

  auto lowest_non_wolf = [&]() {
    for (int target : legal) {
      bool teammate = std::find(context.wolf_teammates.begin(),
                                context.wolf_teammates.end(),
                                target) != context.wolf_teammates.end();
      if (!teammate) return target;
    }
    return lowest;
  };
  auto exile_pick = [&]() -> std::optional<int> {
    if (context.role == Role::Werewolf) return lowest_non_wolf();
    for (const auto& [target, camp] : heuristic_claims(request, context))
      if (camp == Camp::Wolf) return target;
    return std::nullopt;  // nobody looks like a wolf: abstain
  };

  switch (request.kind) {
    case RequestKind::WolfProposal:
      r.target = lowest_non_wolf();
      break;
    case RequestKind::GuardTarget:
      r.target = lowest;
      break;
    case RequestKind::SeerTarget: {
      std::set<int> unchecked = legal;
      for (const auto& obs : context.seer_results) unchecked.erase(obs.target);
      r.target = unchecked.empty() ? lowest : *unchecked.begin();
      break;
    }
    case RequestKind::WitchDecision:
      if (request.can_heal) r.heal = true;
      break;
    case RequestKind::HunterShot:
      r.target = lowest;
      break;
    case RequestKind::ElectionBallot:
      r.target = lowest;
      break;
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot: {
      auto target = exile_pick();
      if (target && legal.count(*target))
        r.target = *target;
      break;
    }
    case RequestKind::Speech:
      r.text = "I vote with the plain evidence in front of us.";
      break;
    case RequestKind::SheriffSummaryRequest: {
      auto target = exile_pick();
      r.recommended = target && legal.count(*target) ? *target : lowest;
      r.text = "Reading the first vote, this is the seat we should settle on.";
      break;
    }
    case RequestKind::InferenceRequest:
      r.claims = heuristic_claims(request, context);
      break;
    case RequestKind::SpeakingOrderChoice:
      r.start = lowest;
      r.ascending = true;
      break;
  }
  return r;
}

}  // namespace wolfarena
