#include "wolfarena/agents/context.hpp"

#include <sstream>

namespace wolfarena {

namespace {

std::string claims_line(const std::map<int, Camp>& claims) {
  std::ostringstream oss;
  bool first = true;
  for (const auto& [target, camp] : claims) {
    if (!first) oss << ", ";
    oss << "seat" << target << "=" << (camp == Camp::Wolf ? "werewolf" : "good");
    first = false;
  }
  return oss.str();
}

}  // namespace

std::optional<std::string> render_event_for(const GameEvent& ev, int viewer,
                                            Role viewer_role) {
  std::ostringstream oss;
  switch (ev.kind) {
    case EventKind::RoleAssigned:
      if (ev.seat != viewer) return std::nullopt;
      oss << "You are seat " << ev.seat << ". Your role: " << role_name(ev.role) << ".";
      return oss.str();
    case EventKind::NightAction:
      switch (ev.night_action) {
        case NightActionKind::WolfProposal:
          // Wolves coordinate at night; the pack sees every proposal.
          if (viewer_role != Role::Werewolf) return std::nullopt;
          oss << "Night " << ev.round << ": werewolf seat " << ev.seat
              << " proposes to kill seat " << *ev.target << ".";
          return oss.str();
        case NightActionKind::Guard:
          if (ev.seat != viewer) return std::nullopt;
          oss << "Night " << ev.round << ": you guarded seat " << *ev.target << ".";
          return oss.str();
        case NightActionKind::SeerCheck:
          if (ev.seat != viewer) return std::nullopt;
          oss << "Night " << ev.round << ": you checked seat " << *ev.target << ".";
          return oss.str();
        case NightActionKind::WitchHeal:
          if (ev.seat != viewer) return std::nullopt;
          oss << "Night " << ev.round << ": you used the healing potion on seat "
              << *ev.target << ".";
          return oss.str();
        case NightActionKind::WitchPoison:
          if (ev.seat != viewer) return std::nullopt;
          oss << "Night " << ev.round << ": you poisoned seat " << *ev.target << ".";
          return oss.str();
        case NightActionKind::WitchPass:
          if (ev.seat != viewer) return std::nullopt;
          oss << "Night " << ev.round << ": you kept both potions.";
          return oss.str();
      }
      return std::nullopt;
    case EventKind::SeerResult:
      if (ev.seat != viewer) return std::nullopt;
      oss << "Night " << ev.round << " check result: seat " << *ev.target
          << (ev.is_werewolf ? " IS a werewolf." : " is NOT a werewolf.");
      return oss.str();
    case EventKind::Death:
      // Night deaths are announced without their cause; nobody learns
      // whether the wolves or the poison did it.
      if (ev.cause == DeathCause::WolfKill || ev.cause == DeathCause::Poison) {
        oss << "Dawn of round " << ev.round << ": seat " << ev.seat
            << " died during the night.";
        return oss.str();
      }
      if (ev.cause == DeathCause::Exile) {
        oss << "Round " << ev.round << ": seat " << ev.seat << " was exiled by vote.";
        return oss.str();
      }
      return std::nullopt;  // hunter-shot deaths render via the shot itself
    case EventKind::SheriffElected:
      oss << "Round " << ev.round << ": seat " << ev.seat << " was elected sheriff.";
      return oss.str();
    case EventKind::SpeakingOrder:
      oss << "Round " << ev.round << ": sheriff seat " << ev.seat
          << " set the speaking order starting at seat " << *ev.start << ", "
          << (ev.ascending ? "ascending" : "descending") << ".";
      return oss.str();
    case EventKind::Speech:
      oss << "Round " << ev.round << ", seat " << ev.seat << " says: " << ev.text;
      return oss.str();
    case EventKind::SheriffSummary:
      oss << "Round " << ev.round << ": sheriff seat " << ev.seat
          << " summarizes the first vote and recommends exiling seat "
          << *ev.recommended << ": " << ev.text;
      return oss.str();
    case EventKind::IdentityInference:
      if (ev.seat != viewer) return std::nullopt;
      oss << "Round " << ev.round << ": your identity inference: "
          << claims_line(ev.claims);
      return oss.str();
    case EventKind::VoteCast: {
      oss << "Round " << ev.round << " " << vote_kind_name(ev.vote) << " vote: seat "
          << ev.seat;
      if (ev.target)
        oss << " votes seat " << *ev.target;
      else
        oss << " abstains";
      if (ev.weight != 1.0) oss << " (weight " << ev.weight << ")";
      oss << ".";
      return oss.str();
    }
    case EventKind::Exile:
      return std::nullopt;  // the paired death event carries the announcement
    case EventKind::HunterShot:
      if (ev.target)
        oss << "Round " << ev.round << ": the hunter (seat " << ev.seat
            << ") shot seat " << *ev.target << "; seat " << *ev.target << " is dead.";
      else
        oss << "Round " << ev.round << ": the hunter (seat " << ev.seat
            << ") chose not to shoot.";
      return oss.str();
    case EventKind::Fallback:
      return std::nullopt;
    case EventKind::GameOver:
      oss << "Game over: the " << camp_name(ev.winner) << " camp wins after "
          << ev.total_rounds << " rounds.";
      return oss.str();
  }
  return std::nullopt;
}

std::vector<std::string> visible_transcript(int seat, Role role,
                                            const std::vector<GameEvent>& history) {
  std::vector<std::string> lines;
  for (const auto& ev : history)
    if (auto line = render_event_for(ev, seat, role)) lines.push_back(std::move(*line));
  return lines;
}

AgentContext build_context(const GameState& state, int seat,
                           const std::vector<GameEvent>& history,
                           const ActionRequest& request,
                           std::vector<Experience> retrieved,
                           std::string history_summary) {
  if (seat < 0 || seat >= state.config.n_players)
    throw EngineError("unknown seat " + std::to_string(seat));
  bool hunter_window = state.pending_hunter && *state.pending_hunter == seat;
  if (!state.is_alive(seat) && !hunter_window)
    throw EngineError("seat " + std::to_string(seat) + " is not active");

  AgentContext ctx;
  ctx.seat = seat;
  ctx.role = state.role(seat);
  ctx.camp = state.camp(seat);
  ctx.round = state.round;
  ctx.phase = state.phase;
  ctx.alive = state.alive;
  ctx.sheriff = state.sheriff;
  ctx.transcript = visible_transcript(seat, ctx.role, history);
  if (ctx.role == Role::Werewolf) {
    for (int s = 0; s < state.config.n_players; ++s)
      if (s != seat && state.role(s) == Role::Werewolf) ctx.wolf_teammates.push_back(s);
  }
  if (ctx.role == Role::Seer) {
    for (const auto& ev : history)
      if (ev.kind == EventKind::SeerResult && ev.seat == seat)
        ctx.seer_results.push_back({ev.round, *ev.target, ev.is_werewolf});
  }
  if (request.kind == RequestKind::WitchDecision) ctx.witch_victim = request.victim;
  ctx.request = request;
  ctx.retrieved = std::move(retrieved);
  ctx.history_summary = std::move(history_summary);
  return ctx;
}

}  // namespace wolfarena
