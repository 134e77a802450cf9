#include "wolfarena/arena/replay.hpp"

#include <sstream>

#include "wolfarena/engine/game.hpp"

namespace wolfarena {

namespace {

// Finds the logged event encoding the response to `request`, scanning
// forward from `from`. The engine echoes every response it accepts, so the
// encoding event always exists in an untampered log.
std::optional<std::size_t> find_response_event(const std::vector<GameEvent>& events,
                                               std::size_t from,
                                               const ActionRequest& request) {
  for (std::size_t i = from; i < events.size(); ++i) {
    const GameEvent& ev = events[i];
    switch (request.kind) {
      case RequestKind::WolfProposal:
        if (ev.kind == EventKind::NightAction &&
            ev.night_action == NightActionKind::WolfProposal && ev.seat == request.seat)
          return i;
        break;
      case RequestKind::GuardTarget:
        if (ev.kind == EventKind::NightAction &&
            ev.night_action == NightActionKind::Guard && ev.seat == request.seat)
          return i;
        break;
      case RequestKind::SeerTarget:
        if (ev.kind == EventKind::NightAction &&
            ev.night_action == NightActionKind::SeerCheck && ev.seat == request.seat)
          return i;
        break;
      case RequestKind::WitchDecision:
        if (ev.kind == EventKind::NightAction && ev.seat == request.seat &&
            (ev.night_action == NightActionKind::WitchHeal ||
             ev.night_action == NightActionKind::WitchPoison ||
             ev.night_action == NightActionKind::WitchPass))
          return i;
        break;
      case RequestKind::HunterShot:
        if (ev.kind == EventKind::HunterShot && ev.seat == request.seat) return i;
        break;
      case RequestKind::ElectionBallot:
      case RequestKind::PseudoBallot:
      case RequestKind::OfficialBallot:
      case RequestKind::TiebreakBallot:
        if (ev.kind == EventKind::VoteCast && ev.seat == request.seat &&
            ev.vote == ballot_vote_kind(request.kind))
          return i;
        break;
      case RequestKind::Speech:
        if (ev.kind == EventKind::Speech && ev.seat == request.seat) return i;
        break;
      case RequestKind::SheriffSummaryRequest:
        if (ev.kind == EventKind::SheriffSummary && ev.seat == request.seat) return i;
        break;
      case RequestKind::InferenceRequest:
        if (ev.kind == EventKind::IdentityInference && ev.seat == request.seat) return i;
        break;
      case RequestKind::SpeakingOrderChoice:
        if (ev.kind == EventKind::SpeakingOrder && ev.seat == request.seat) return i;
        break;
    }
  }
  return std::nullopt;
}

AgentResponse response_from_events(const std::vector<GameEvent>& events,
                                   std::size_t cursor, std::size_t at,
                                   const ActionRequest& request) {
  const GameEvent& ev = events[at];
  AgentResponse r;
  r.kind = request.kind;
  r.seat = request.seat;
  switch (request.kind) {
    case RequestKind::WolfProposal:
    case RequestKind::GuardTarget:
    case RequestKind::SeerTarget:
      r.target = ev.target;
      break;
    case RequestKind::WitchDecision:
      if (ev.night_action == NightActionKind::WitchHeal) {
        r.heal = true;
        // Both-potions rule variant: a poison echo may directly follow.
        if (at + 1 < events.size() && events[at + 1].kind == EventKind::NightAction &&
            events[at + 1].night_action == NightActionKind::WitchPoison &&
            events[at + 1].seat == request.seat)
          r.poison = events[at + 1].target;
      } else if (ev.night_action == NightActionKind::WitchPoison) {
        r.poison = ev.target;
      }
      break;
    case RequestKind::HunterShot:
      r.target = ev.target;
      break;
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot:
      r.target = ev.target;
      break;
    case RequestKind::Speech:
      r.text = ev.text;
      break;
    case RequestKind::SheriffSummaryRequest:
      r.recommended = ev.recommended;
      r.text = ev.text;
      break;
    case RequestKind::InferenceRequest:
      r.claims = ev.claims;
      break;
    case RequestKind::SpeakingOrderChoice:
      r.start = ev.start;
      r.ascending = ev.ascending;
      break;
  }
  // A fallback marker between the batch start and the echo restores the
  // via_fallback flag, which the engine re-logs on replay.
  for (std::size_t i = cursor; i < at; ++i) {
    if (events[i].kind == EventKind::Fallback && events[i].seat == request.seat &&
        events[i].text == request_kind_name(request.kind)) {
      r.via_fallback = true;
      break;
    }
  }
  return r;
}

}  // namespace

ReplayResult replay_log(const GameLog& log) {
  if (log.aborted)
    return ReplayResult::fail("log is marked aborted: " + log.abort_reason);
  if (config_digest(log.header.config) != log.header.config_digest)
    return ReplayResult::fail("config digest mismatch in header");
  if (log.header.config.seed != log.header.game_seed)
    return ReplayResult::fail("header game_seed disagrees with config seed");

  Game game(log.header.config);
  std::size_t cursor = 0;

  auto compare_segment = [&](const std::vector<GameEvent>& produced)
      -> std::optional<ReplayResult> {
    for (const auto& ev : produced) {
      if (cursor >= log.events.size())
        return ReplayResult::fail("log ends before the game does (premature end)",
                                  cursor);
      if (!(ev == log.events[cursor])) {
        std::ostringstream oss;
        oss << "divergence at event " << cursor << ": regenerated "
            << event_to_json(ev) << " vs logged " << event_to_json(log.events[cursor]);
        return ReplayResult::fail(oss.str(), cursor);
      }
      ++cursor;
    }
    return std::nullopt;
  };

  if (auto failure = compare_segment(game.events())) return *failure;

  while (!game.finished()) {
    auto requests = game.pending_requests();
    if (requests.empty())
      return ReplayResult::fail("engine stalled during replay", cursor);
    std::vector<AgentResponse> responses;
    for (const auto& request : requests) {
      auto at = find_response_event(log.events, cursor, request);
      if (!at) {
        std::ostringstream oss;
        oss << "log serves no response for " << request_kind_name(request.kind)
            << " from seat " << request.seat << " (premature end)";
        return ReplayResult::fail(oss.str(), cursor);
      }
      responses.push_back(response_from_events(log.events, cursor, *at, request));
    }
    std::vector<GameEvent> produced;
    try {
      produced = game.submit(responses);
    } catch (const EngineError& e) {
      return ReplayResult::fail(std::string("logged response rejected: ") + e.what(),
                                cursor);
    }
    if (auto failure = compare_segment(produced)) return *failure;
  }
  if (cursor != log.events.size())
    return ReplayResult::fail("log has trailing events beyond game over", cursor);
  return ReplayResult::pass();
}

ReplayResult replay_file(const std::string& path) {
  GameLog log;
  try {
    log = read_game_log_file(path);
  } catch (const std::exception& e) {
    return ReplayResult::fail(std::string("unreadable log: ") + e.what());
  }
  return replay_log(log);
}

}  // namespace wolfarena
