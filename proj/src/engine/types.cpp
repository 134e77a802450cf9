#include "wolfarena/engine/types.hpp"

#include <algorithm>
#include <map>

namespace wolfarena {

const char* role_name(Role r) {
  switch (r) {
    case Role::Werewolf: return "werewolf";
    case Role::Villager: return "villager";
    case Role::Seer: return "seer";
    case Role::Witch: return "witch";
    case Role::Hunter: return "hunter";
    case Role::Guard: return "guard";
  }
  return "?";
}

const char* camp_name(Camp c) { return c == Camp::Wolf ? "wolf" : "good"; }

Role role_from_name(const std::string& name) {
  static const std::map<std::string, Role> table = {
      {"werewolf", Role::Werewolf}, {"villager", Role::Villager},
      {"seer", Role::Seer},         {"witch", Role::Witch},
      {"hunter", Role::Hunter},     {"guard", Role::Guard}};
  auto it = table.find(name);
  if (it == table.end()) throw EngineError("unknown role name: " + name);
  return it->second;
}

Camp camp_from_name(const std::string& name) {
  if (name == "wolf") return Camp::Wolf;
  if (name == "good") return Camp::Good;
  throw EngineError("unknown camp name: " + name);
}

const char* death_cause_name(DeathCause c) {
  switch (c) {
    case DeathCause::WolfKill: return "wolf_kill";
    case DeathCause::Poison: return "poison";
    case DeathCause::Exile: return "exile";
    case DeathCause::HunterShot: return "hunter_shot";
  }
  return "?";
}

DeathCause death_cause_from_name(const std::string& name) {
  if (name == "wolf_kill") return DeathCause::WolfKill;
  if (name == "poison") return DeathCause::Poison;
  if (name == "exile") return DeathCause::Exile;
  if (name == "hunter_shot") return DeathCause::HunterShot;
  throw EngineError("unknown death cause: " + name);
}

std::vector<Role> GameConfig::default_roster(int n_players) {
  if (n_players == 8) {
    return {Role::Werewolf, Role::Werewolf, Role::Villager, Role::Villager,
            Role::Villager, Role::Villager, Role::Seer,     Role::Guard};
  }
  if (n_players == 12) {
    return {Role::Werewolf, Role::Werewolf, Role::Werewolf, Role::Werewolf,
            Role::Villager, Role::Villager, Role::Villager, Role::Villager,
            Role::Seer,     Role::Witch,    Role::Hunter,   Role::Guard};
  }
  // Intermediate sizes scale the 8-player board: extra seats alternate
  // villager / werewolf / villager / villager.
  std::vector<Role> roster = default_roster(8);
  static const Role extras[4] = {Role::Villager, Role::Werewolf, Role::Villager,
                                 Role::Villager};
  for (int i = 8; i < n_players; ++i) roster.push_back(extras[(i - 8) % 4]);
  return roster;
}

GameConfig GameConfig::standard(int n_players, bool sheriff, std::uint64_t seed) {
  GameConfig cfg;
  cfg.n_players = n_players;
  cfg.roster = default_roster(n_players);
  cfg.sheriff_enabled = sheriff;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

int GameConfig::wolves_in_roster() const {
  return static_cast<int>(std::count(roster.begin(), roster.end(), Role::Werewolf));
}

void GameConfig::validate() const {
  if (n_players < 8 || n_players > 12)
    throw EngineError("n_players must be in 8..12, got " + std::to_string(n_players));
  if (static_cast<int>(roster.size()) != n_players)
    throw EngineError("roster size " + std::to_string(roster.size()) +
                      " does not match n_players " + std::to_string(n_players));
  if (wolves_in_roster() < 1) throw EngineError("roster needs at least one werewolf");
  auto in_unit = [](double a) { return a >= 0.0 && a <= 1.0; };
  if (!in_unit(alpha_guard) || !in_unit(alpha_wolf) || !in_unit(alpha_kre))
    throw EngineError("alpha parameters must lie in [0,1]");
}

}  // namespace wolfarena
