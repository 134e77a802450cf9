// Core domain types shared by the whole arena: roles, camps, board
// configuration. Rule flags default to the standard tabletop readings.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wolfarena {

enum class Role { Werewolf, Villager, Seer, Witch, Hunter, Guard };
enum class Camp { Wolf, Good };

inline Camp camp_of(Role r) { return r == Role::Werewolf ? Camp::Wolf : Camp::Good; }

// "Gods" are the skilled good-camp roles.
inline bool is_god(Role r) {
  return r == Role::Seer || r == Role::Witch || r == Role::Hunter || r == Role::Guard;
}

const char* role_name(Role r);
const char* camp_name(Camp c);
Role role_from_name(const std::string& name);
Camp camp_from_name(const std::string& name);

enum class DeathCause { WolfKill, Poison, Exile, HunterShot };
const char* death_cause_name(DeathCause c);
DeathCause death_cause_from_name(const std::string& name);

// What happens when the guard protects the victim the witch also heals.
enum class GuardSaveInteraction { Survive, Die };

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GameConfig {
  int n_players = 8;
  std::vector<Role> roster;  // size == n_players; order irrelevant (shuffled)
  bool sheriff_enabled = false;
  GuardSaveInteraction guard_save_interaction = GuardSaveInteraction::Survive;
  bool witch_both_potions_same_night = false;
  bool hunter_shoots_when_poisoned = false;
  bool wolf_win_on_equal = false;  // reserved; the literal rule is strict >
  double alpha_guard = 0.5;
  double alpha_wolf = 0.5;
  double alpha_kre = 0.5;
  std::uint64_t seed = 0;

  // The standard boards: 8 players = 2 werewolves, 4 villagers, seer, guard;
  // 12 players = 4 werewolves, 4 villagers, seer, witch, hunter, guard.
  static std::vector<Role> default_roster(int n_players);
  static GameConfig standard(int n_players, bool sheriff, std::uint64_t seed);

  int wolves_in_roster() const;
  void validate() const;  // throws EngineError on any invariant violation
};

struct PlayerSeat {
  int seat = 0;
  Role role = Role::Villager;
  std::string model_tag;  // opaque id of the controlling agent/model
};

}  // namespace wolfarena
