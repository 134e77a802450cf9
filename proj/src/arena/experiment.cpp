#include "wolfarena/arena/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wolfarena {

using json = nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      throw ConfigError("unknown key \"" + key + "\" in " + where);
}

GameConfig parse_game(const json& j) {
  reject_unknown_keys(j, {"n_players", "sheriff", "roster", "guard_save_interaction",
                          "witch_both_potions_same_night", "hunter_shoots_when_poisoned",
                          "wolf_win_on_equal", "alpha_guard", "alpha_wolf", "alpha_kre"},
                      "game");
  GameConfig game;
  game.n_players = j.value("n_players", 8);
  game.sheriff_enabled = j.value("sheriff", false);
  if (j.contains("roster")) {
    game.roster.clear();
    for (const auto& r : j.at("roster"))
      game.roster.push_back(role_from_name(r.get<std::string>()));
  } else {
    game.roster = GameConfig::default_roster(game.n_players);
  }
  std::string gsi = j.value("guard_save_interaction", "survive");
  if (gsi != "survive" && gsi != "die")
    throw ConfigError("game.guard_save_interaction must be \"survive\" or \"die\"");
  game.guard_save_interaction =
      gsi == "die" ? GuardSaveInteraction::Die : GuardSaveInteraction::Survive;
  game.witch_both_potions_same_night = j.value("witch_both_potions_same_night", false);
  game.hunter_shoots_when_poisoned = j.value("hunter_shoots_when_poisoned", false);
  game.wolf_win_on_equal = j.value("wolf_win_on_equal", false);
  game.alpha_guard = j.value("alpha_guard", 0.5);
  game.alpha_wolf = j.value("alpha_wolf", 0.5);
  game.alpha_kre = j.value("alpha_kre", 0.5);
  return game;
}

ModelSlot parse_slot(const std::string& name, const json& j) {
  reject_unknown_keys(j, {"type", "provider", "base_url", "path", "model", "api_key_env",
                          "temperature", "max_tokens", "top_p", "max_attempts",
                          "max_concurrent", "prompt_dir"},
                      "models." + name);
  ModelSlot slot;
  slot.name = name;
  std::string type = j.value("type", "random");
  if (type == "random")
    slot.type = AgentType::Random;
  else if (type == "heuristic")
    slot.type = AgentType::Heuristic;
  else if (type == "llm")
    slot.type = AgentType::Llm;
  else
    throw ConfigError("models." + name + ".type must be random, heuristic, or llm");
  slot.provider_kind = j.value("provider", "mock");
  if (slot.provider_kind != "mock" && slot.provider_kind != "http")
    throw ConfigError("models." + name + ".provider must be mock or http");
  slot.http.base_url = j.value("base_url", "");
  slot.http.path = j.value("path", slot.http.path);
  slot.http.model = j.value("model", name);
  slot.http.api_key_env = j.value("api_key_env", "");
  slot.http.max_attempts = j.value("max_attempts", slot.http.max_attempts);
  slot.http.max_concurrent = j.value("max_concurrent", slot.http.max_concurrent);
  slot.params.temperature = j.value("temperature", slot.params.temperature);
  slot.params.max_tokens = j.value("max_tokens", slot.params.max_tokens);
  slot.params.top_p = j.value("top_p", slot.params.top_p);
  slot.prompt_dir = j.value("prompt_dir", "");
  if (slot.type == AgentType::Llm && slot.provider_kind == "http" &&
      slot.http.base_url.empty())
    throw ConfigError("models." + name + " uses the http provider but has no base_url");
  return slot;
}

PoolSettings parse_pool(const json& j) {
  reject_unknown_keys(j, {"use_for", "file", "k", "threshold", "filter", "embedder",
                          "embedder_base_url", "embedder_model", "embedder_api_key_env",
                          "embedder_dimension"},
                      "pool");
  PoolSettings pool;
  std::string use = j.value("use_for", "none");
  if (use == "none")
    pool.use_for = PoolSettings::UseFor::None;
  else if (use == "all")
    pool.use_for = PoolSettings::UseFor::All;
  else if (use == "good")
    pool.use_for = PoolSettings::UseFor::Good;
  else if (use == "wolf")
    pool.use_for = PoolSettings::UseFor::Wolf;
  else
    throw ConfigError("pool.use_for must be none, all, good, or wolf");
  pool.file = j.value("file", "pool.jsonl");
  pool.retrieval.k = j.value("k", 3);
  pool.retrieval.threshold = j.value("threshold", 0.5);
  if (j.contains("filter")) {
    reject_unknown_keys(j.at("filter"), {"same_role", "same_model", "same_player"},
                        "pool.filter");
    pool.filter_same_role = j.at("filter").value("same_role", false);
    pool.filter_same_model = j.at("filter").value("same_model", false);
    pool.filter_same_player = j.at("filter").value("same_player", false);
  }
  pool.embedder_kind = j.value("embedder", "hashed_bag");
  if (pool.embedder_kind != "hashed_bag" && pool.embedder_kind != "http")
    throw ConfigError("pool.embedder must be hashed_bag or http");
  pool.http_embedder.base_url = j.value("embedder_base_url", "");
  pool.http_embedder.model = j.value("embedder_model", "");
  pool.http_embedder.api_key_env = j.value("embedder_api_key_env", "");
  pool.http_embedder.dimension = j.value("embedder_dimension", 768);
  if (pool.embedder_kind == "http" && pool.http_embedder.base_url.empty())
    throw ConfigError("pool.embedder is http but embedder_base_url is missing");
  return pool;
}

}  // namespace

ExperimentConfig experiment_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  reject_unknown_keys(j, {"game", "n_games", "master_seed", "output_dir",
                          "max_parallel_games", "matchup", "models", "assignment",
                          "pool"},
                      "the experiment config");
  ExperimentConfig config;
  if (j.contains("game")) config.game = parse_game(j.at("game"));
  else config.game = GameConfig::standard(8, false, 0);
  config.n_games = j.value("n_games", 10);
  config.master_seed = j.value("master_seed", std::uint64_t{0});
  config.output_dir = j.value("output_dir", "out");
  config.max_parallel_games = j.value("max_parallel_games", 1);
  config.matchup = j.value("matchup", "");

  if (j.contains("models"))
    for (const auto& [name, slot] : j.at("models").items())
      config.slots.emplace(name, parse_slot(name, slot));
  if (config.slots.empty()) {
    ModelSlot fallback;
    fallback.name = "random";
    config.slots.emplace("random", fallback);
    config.assign_default = "random";
  }

  if (j.contains("assignment")) {
    const auto& a = j.at("assignment");
    reject_unknown_keys(a, {"default", "good", "wolf", "roles"}, "assignment");
    config.assign_default = a.value("default", config.assign_default);
    if (a.contains("good")) config.assign_camp[Camp::Good] = a.at("good").get<std::string>();
    if (a.contains("wolf")) config.assign_camp[Camp::Wolf] = a.at("wolf").get<std::string>();
    if (a.contains("roles"))
      for (const auto& [role, slot] : a.at("roles").items())
        config.assign_role[role_from_name(role)] = slot.get<std::string>();
  }
  if (config.assign_default.empty() && config.assign_camp.empty() &&
      config.assign_role.empty())
    config.assign_default = config.slots.begin()->first;

  if (j.contains("pool")) config.pool = parse_pool(j.at("pool"));
  config.validate();
  return config;
}

std::string experiment_to_json(const ExperimentConfig& config) {
  json j;
  json game;
  game["n_players"] = config.game.n_players;
  game["sheriff"] = config.game.sheriff_enabled;
  json roster = json::array();
  for (Role r : config.game.roster) roster.push_back(role_name(r));
  game["roster"] = roster;
  game["guard_save_interaction"] =
      config.game.guard_save_interaction == GuardSaveInteraction::Die ? "die" : "survive";
  game["witch_both_potions_same_night"] = config.game.witch_both_potions_same_night;
  game["hunter_shoots_when_poisoned"] = config.game.hunter_shoots_when_poisoned;
  game["wolf_win_on_equal"] = config.game.wolf_win_on_equal;
  game["alpha_guard"] = config.game.alpha_guard;
  game["alpha_wolf"] = config.game.alpha_wolf;
  game["alpha_kre"] = config.game.alpha_kre;
  j["game"] = game;
  j["n_games"] = config.n_games;
  j["master_seed"] = config.master_seed;
  j["output_dir"] = config.output_dir;
  j["max_parallel_games"] = config.max_parallel_games;
  j["matchup"] = config.resolved_matchup();
  json models;
  for (const auto& [name, slot] : config.slots) {
    json s;
    s["type"] = slot.type == AgentType::Random      ? "random"
                : slot.type == AgentType::Heuristic ? "heuristic"
                                                    : "llm";
    if (slot.type == AgentType::Llm) {
      s["provider"] = slot.provider_kind;
      if (!slot.http.base_url.empty()) s["base_url"] = slot.http.base_url;
      s["model"] = slot.http.model;
      if (!slot.http.api_key_env.empty()) s["api_key_env"] = slot.http.api_key_env;
      s["temperature"] = slot.params.temperature;
      s["max_tokens"] = slot.params.max_tokens;
      s["top_p"] = slot.params.top_p;
    }
    models[name] = s;
  }
  j["models"] = models;
  json assignment;
  if (!config.assign_default.empty()) assignment["default"] = config.assign_default;
  for (const auto& [camp, slot] : config.assign_camp)
    assignment[camp_name(camp)] = slot;
  if (!config.assign_role.empty()) {
    json roles;
    for (const auto& [role, slot] : config.assign_role) roles[role_name(role)] = slot;
    assignment["roles"] = roles;
  }
  j["assignment"] = assignment;
  json pool;
  switch (config.pool.use_for) {
    case PoolSettings::UseFor::None: pool["use_for"] = "none"; break;
    case PoolSettings::UseFor::All: pool["use_for"] = "all"; break;
    case PoolSettings::UseFor::Good: pool["use_for"] = "good"; break;
    case PoolSettings::UseFor::Wolf: pool["use_for"] = "wolf"; break;
  }
  pool["file"] = config.pool.file;
  pool["k"] = config.pool.retrieval.k;
  pool["threshold"] = config.pool.retrieval.threshold;
  j["pool"] = pool;
  return j.dump(2);
}

ExperimentConfig load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open experiment config: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return experiment_from_json(oss.str());
}

const ModelSlot& ExperimentConfig::slot_for_role(Role role) const {
  std::string name;
  auto rit = assign_role.find(role);
  if (rit != assign_role.end()) {
    name = rit->second;
  } else {
    auto cit = assign_camp.find(camp_of(role));
    name = cit != assign_camp.end() ? cit->second : assign_default;
  }
  if (name.empty())
    throw ConfigError(std::string("no model slot assigned for role ") + role_name(role));
  auto it = slots.find(name);
  if (it == slots.end())
    throw ConfigError("assignment references undefined model slot \"" + name + "\"");
  return it->second;
}

std::string ExperimentConfig::resolved_matchup() const {
  if (!matchup.empty()) return matchup;
  std::ostringstream oss;
  auto good = assign_camp.find(Camp::Good);
  auto wolf = assign_camp.find(Camp::Wolf);
  if (good != assign_camp.end() || wolf != assign_camp.end()) {
    oss << "good=" << (good != assign_camp.end() ? good->second : assign_default)
        << " vs wolf=" << (wolf != assign_camp.end() ? wolf->second : assign_default);
  } else {
    oss << "all=" << assign_default;
  }
  return oss.str();
}

std::string ExperimentConfig::pool_path() const {
  std::filesystem::path p(pool.file);
  if (p.is_absolute()) return p.string();
  return (std::filesystem::path(output_dir) / p).string();
}

void ExperimentConfig::validate() const {
  try {
    game.validate();
  } catch (const EngineError& e) {
    throw ConfigError(std::string("game: ") + e.what());
  }
  if (n_games < 1) throw ConfigError("n_games must be >= 1");
  if (max_parallel_games < 1) throw ConfigError("max_parallel_games must be >= 1");
  for (const auto& [camp, name] : assign_camp)
    if (!slots.count(name))
      throw ConfigError("assignment references undefined model slot \"" + name + "\"");
  for (const auto& [role, name] : assign_role)
    if (!slots.count(name))
      throw ConfigError("assignment references undefined model slot \"" + name + "\"");
  if (!assign_default.empty() && !slots.count(assign_default))
    throw ConfigError("assignment references undefined model slot \"" + assign_default +
                      "\"");
  std::set<Role> roster_roles(game.roster.begin(), game.roster.end());
  for (Role role : roster_roles) slot_for_role(role);  // throws when unresolvable
  if (pool.enabled()) {
    try {
      pool.retrieval.validate();
    } catch (const EngineError& e) {
      throw ConfigError(std::string("pool: ") + e.what());
    }
  }
}

}  // namespace wolfarena
