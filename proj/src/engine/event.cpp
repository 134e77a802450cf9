#include "wolfarena/engine/event.hpp"

#include <json.hpp>

namespace wolfarena {

using json = nlohmann::json;

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::RoleAssigned: return "role_assigned";
    case EventKind::NightAction: return "night_action";
    case EventKind::SeerResult: return "seer_result";
    case EventKind::Death: return "death";
    case EventKind::SheriffElected: return "sheriff_elected";
    case EventKind::SpeakingOrder: return "speaking_order";
    case EventKind::Speech: return "speech";
    case EventKind::SheriffSummary: return "sheriff_summary";
    case EventKind::IdentityInference: return "identity_inference";
    case EventKind::VoteCast: return "vote_cast";
    case EventKind::Exile: return "exile";
    case EventKind::HunterShot: return "hunter_shot";
    case EventKind::Fallback: return "fallback";
    case EventKind::GameOver: return "game_over";
  }
  return "?";
}

EventKind event_kind_from_name(const std::string& name) {
  static const std::map<std::string, EventKind> table = {
      {"role_assigned", EventKind::RoleAssigned},
      {"night_action", EventKind::NightAction},
      {"seer_result", EventKind::SeerResult},
      {"death", EventKind::Death},
      {"sheriff_elected", EventKind::SheriffElected},
      {"speaking_order", EventKind::SpeakingOrder},
      {"speech", EventKind::Speech},
      {"sheriff_summary", EventKind::SheriffSummary},
      {"identity_inference", EventKind::IdentityInference},
      {"vote_cast", EventKind::VoteCast},
      {"exile", EventKind::Exile},
      {"hunter_shot", EventKind::HunterShot},
      {"fallback", EventKind::Fallback},
      {"game_over", EventKind::GameOver}};
  auto it = table.find(name);
  if (it == table.end()) throw EngineError("unknown event kind: " + name);
  return it->second;
}

const char* night_action_name(NightActionKind k) {
  switch (k) {
    case NightActionKind::WolfProposal: return "wolf_proposal";
    case NightActionKind::Guard: return "guard";
    case NightActionKind::SeerCheck: return "seer_check";
    case NightActionKind::WitchHeal: return "witch_heal";
    case NightActionKind::WitchPoison: return "witch_poison";
    case NightActionKind::WitchPass: return "witch_pass";
  }
  return "?";
}

NightActionKind night_action_from_name(const std::string& name) {
  static const std::map<std::string, NightActionKind> table = {
      {"wolf_proposal", NightActionKind::WolfProposal},
      {"guard", NightActionKind::Guard},
      {"seer_check", NightActionKind::SeerCheck},
      {"witch_heal", NightActionKind::WitchHeal},
      {"witch_poison", NightActionKind::WitchPoison},
      {"witch_pass", NightActionKind::WitchPass}};
  auto it = table.find(name);
  if (it == table.end()) throw EngineError("unknown night action: " + name);
  return it->second;
}

const char* vote_kind_name(VoteKind k) {
  switch (k) {
    case VoteKind::Election: return "election";
    case VoteKind::Pseudo: return "pseudo";
    case VoteKind::Official: return "official";
    case VoteKind::Tiebreak: return "tiebreak";
  }
  return "?";
}

VoteKind vote_kind_from_name(const std::string& name) {
  if (name == "election") return VoteKind::Election;
  if (name == "pseudo") return VoteKind::Pseudo;
  if (name == "official") return VoteKind::Official;
  if (name == "tiebreak") return VoteKind::Tiebreak;
  throw EngineError("unknown vote kind: " + name);
}

GameEvent GameEvent::role_assigned(int round, int seat, Role role) {
  GameEvent ev;
  ev.kind = EventKind::RoleAssigned;
  ev.round = round;
  ev.seat = seat;
  ev.role = role;
  return ev;
}

GameEvent GameEvent::night_action_of(int round, NightActionKind k, int actor,
                                     std::optional<int> target) {
  GameEvent ev;
  ev.kind = EventKind::NightAction;
  ev.round = round;
  ev.night_action = k;
  ev.seat = actor;
  ev.target = target;
  return ev;
}

GameEvent GameEvent::seer_result(int round, int actor, int target, bool is_wolf) {
  GameEvent ev;
  ev.kind = EventKind::SeerResult;
  ev.round = round;
  ev.seat = actor;
  ev.target = target;
  ev.is_werewolf = is_wolf;
  return ev;
}

GameEvent GameEvent::death(int round, int seat, DeathCause cause) {
  GameEvent ev;
  ev.kind = EventKind::Death;
  ev.round = round;
  ev.seat = seat;
  ev.cause = cause;
  return ev;
}

GameEvent GameEvent::sheriff_elected(int round, int seat) {
  GameEvent ev;
  ev.kind = EventKind::SheriffElected;
  ev.round = round;
  ev.seat = seat;
  return ev;
}

GameEvent GameEvent::speaking_order(int round, int chooser, int start, bool ascending) {
  GameEvent ev;
  ev.kind = EventKind::SpeakingOrder;
  ev.round = round;
  ev.seat = chooser;
  ev.start = start;
  ev.ascending = ascending;
  return ev;
}

GameEvent GameEvent::speech(int round, int seat, std::string text) {
  GameEvent ev;
  ev.kind = EventKind::Speech;
  ev.round = round;
  ev.seat = seat;
  ev.text = std::move(text);
  return ev;
}

GameEvent GameEvent::sheriff_summary(int round, int seat, int recommended,
                                     std::string text) {
  GameEvent ev;
  ev.kind = EventKind::SheriffSummary;
  ev.round = round;
  ev.seat = seat;
  ev.recommended = recommended;
  ev.text = std::move(text);
  return ev;
}

GameEvent GameEvent::identity_inference(int round, int seat, std::map<int, Camp> claims) {
  GameEvent ev;
  ev.kind = EventKind::IdentityInference;
  ev.round = round;
  ev.seat = seat;
  ev.claims = std::move(claims);
  return ev;
}

GameEvent GameEvent::vote_cast(int round, VoteKind vote, int stage, int voter,
                               std::optional<int> target, double weight) {
  GameEvent ev;
  ev.kind = EventKind::VoteCast;
  ev.round = round;
  ev.vote = vote;
  ev.stage = stage;
  ev.seat = voter;
  ev.target = target;
  ev.weight = weight;
  return ev;
}

GameEvent GameEvent::exile(int round, int seat) {
  GameEvent ev;
  ev.kind = EventKind::Exile;
  ev.round = round;
  ev.seat = seat;
  return ev;
}

GameEvent GameEvent::hunter_shot(int round, int actor, std::optional<int> target) {
  GameEvent ev;
  ev.kind = EventKind::HunterShot;
  ev.round = round;
  ev.seat = actor;
  ev.target = target;
  return ev;
}

GameEvent GameEvent::fallback(int round, int seat, std::string request_name) {
  GameEvent ev;
  ev.kind = EventKind::Fallback;
  ev.round = round;
  ev.seat = seat;
  ev.text = std::move(request_name);
  return ev;
}

GameEvent GameEvent::game_over(int round, Camp winner, int total_rounds) {
  GameEvent ev;
  ev.kind = EventKind::GameOver;
  ev.round = round;
  ev.winner = winner;
  ev.total_rounds = total_rounds;
  return ev;
}

std::string event_to_json(const GameEvent& ev) {
  json j;
  j["kind"] = event_kind_name(ev.kind);
  j["round"] = ev.round;
  switch (ev.kind) {
    case EventKind::RoleAssigned:
      j["seat"] = ev.seat;
      j["role"] = role_name(ev.role);
      break;
    case EventKind::NightAction:
      j["action"] = night_action_name(ev.night_action);
      j["actor"] = ev.seat;
      if (ev.target) j["target"] = *ev.target; else j["target"] = nullptr;
      break;
    case EventKind::SeerResult:
      j["actor"] = ev.seat;
      j["target"] = ev.target ? json(*ev.target) : json(nullptr);
      j["is_werewolf"] = ev.is_werewolf;
      break;
    case EventKind::Death:
      j["seat"] = ev.seat;
      j["cause"] = death_cause_name(ev.cause);
      break;
    case EventKind::SheriffElected:
      j["seat"] = ev.seat;
      break;
    case EventKind::SpeakingOrder:
      j["chooser"] = ev.seat;
      j["start"] = ev.start ? json(*ev.start) : json(nullptr);
      j["ascending"] = ev.ascending;
      break;
    case EventKind::Speech:
      j["seat"] = ev.seat;
      j["text"] = ev.text;
      break;
    case EventKind::SheriffSummary:
      j["seat"] = ev.seat;
      j["recommended"] = ev.recommended ? json(*ev.recommended) : json(nullptr);
      j["text"] = ev.text;
      break;
    case EventKind::IdentityInference: {
      j["seat"] = ev.seat;
      json claims = json::object();
      for (const auto& [target, camp] : ev.claims)
        claims[std::to_string(target)] = camp_name(camp);
      j["claims"] = claims;
      break;
    }
    case EventKind::VoteCast:
      j["vote"] = vote_kind_name(ev.vote);
      j["stage"] = ev.stage;
      j["voter"] = ev.seat;
      j["target"] = ev.target ? json(*ev.target) : json(nullptr);
      j["weight"] = ev.weight;
      break;
    case EventKind::Exile:
      j["seat"] = ev.seat;
      break;
    case EventKind::HunterShot:
      j["actor"] = ev.seat;
      j["target"] = ev.target ? json(*ev.target) : json(nullptr);
      break;
    case EventKind::Fallback:
      j["seat"] = ev.seat;
      j["request"] = ev.text;
      break;
    case EventKind::GameOver:
      j["winner"] = camp_name(ev.winner);
      j["total_rounds"] = ev.total_rounds;
      break;
  }
  return j.dump();
}

GameEvent event_from_json(const std::string& line) {
  json j = json::parse(line);
  GameEvent ev;
  ev.kind = event_kind_from_name(j.at("kind").get<std::string>());
  ev.round = j.at("round").get<int>();
  auto opt_int = [&](const char* key) -> std::optional<int> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<int>();
  };
  switch (ev.kind) {
    case EventKind::RoleAssigned:
      ev.seat = j.at("seat").get<int>();
      ev.role = role_from_name(j.at("role").get<std::string>());
      break;
    case EventKind::NightAction:
      ev.night_action = night_action_from_name(j.at("action").get<std::string>());
      ev.seat = j.at("actor").get<int>();
      ev.target = opt_int("target");
      break;
    case EventKind::SeerResult:
      ev.seat = j.at("actor").get<int>();
      ev.target = opt_int("target");
      ev.is_werewolf = j.at("is_werewolf").get<bool>();
      break;
    case EventKind::Death:
      ev.seat = j.at("seat").get<int>();
      ev.cause = death_cause_from_name(j.at("cause").get<std::string>());
      break;
    case EventKind::SheriffElected:
      ev.seat = j.at("seat").get<int>();
      break;
    case EventKind::SpeakingOrder:
      ev.seat = j.at("chooser").get<int>();
      ev.start = opt_int("start");
      ev.ascending = j.at("ascending").get<bool>();
      break;
    case EventKind::Speech:
      ev.seat = j.at("seat").get<int>();
      ev.text = j.at("text").get<std::string>();
      break;
    case EventKind::SheriffSummary:
      ev.seat = j.at("seat").get<int>();
      ev.recommended = opt_int("recommended");
      ev.text = j.at("text").get<std::string>();
      break;
    case EventKind::IdentityInference:
      ev.seat = j.at("seat").get<int>();
      for (const auto& [key, value] : j.at("claims").items())
        ev.claims[std::stoi(key)] = camp_from_name(value.get<std::string>());
      break;
    case EventKind::VoteCast:
      ev.vote = vote_kind_from_name(j.at("vote").get<std::string>());
      ev.stage = j.at("stage").get<int>();
      ev.seat = j.at("voter").get<int>();
      ev.target = opt_int("target");
      ev.weight = j.at("weight").get<double>();
      break;
    case EventKind::Exile:
      ev.seat = j.at("seat").get<int>();
      break;
    case EventKind::HunterShot:
      ev.seat = j.at("actor").get<int>();
      ev.target = opt_int("target");
      break;
    case EventKind::Fallback:
      ev.seat = j.at("seat").get<int>();
      ev.text = j.at("request").get<std::string>();
      break;
    case EventKind::GameOver:
      ev.winner = camp_from_name(j.at("winner").get<std::string>());
      ev.total_rounds = j.at("total_rounds").get<int>();
      break;
  }
  return ev;
}

}  // namespace wolfarena
