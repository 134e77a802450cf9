#include "wolfarena/engine/log_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

using json = nlohmann::json;

std::string config_to_json(const GameConfig& config) {
  json j;
  j["n_players"] = config.n_players;
  json roster = json::array();
  for (Role r : config.roster) roster.push_back(role_name(r));
  j["roster"] = roster;
  j["sheriff_enabled"] = config.sheriff_enabled;
  j["guard_save_interaction"] =
      config.guard_save_interaction == GuardSaveInteraction::Survive ? "survive" : "die";
  j["witch_both_potions_same_night"] = config.witch_both_potions_same_night;
  j["hunter_shoots_when_poisoned"] = config.hunter_shoots_when_poisoned;
  j["wolf_win_on_equal"] = config.wolf_win_on_equal;
  j["alpha_guard"] = config.alpha_guard;
  j["alpha_wolf"] = config.alpha_wolf;
  j["alpha_kre"] = config.alpha_kre;
  j["seed"] = config.seed;
  return j.dump();
}

GameConfig config_from_json(const std::string& text) {
  json j = json::parse(text);
  GameConfig config;
  config.n_players = j.at("n_players").get<int>();
  config.roster.clear();
  for (const auto& r : j.at("roster"))
    config.roster.push_back(role_from_name(r.get<std::string>()));
  config.sheriff_enabled = j.at("sheriff_enabled").get<bool>();
  config.guard_save_interaction = j.at("guard_save_interaction").get<std::string>() == "die"
                                      ? GuardSaveInteraction::Die
                                      : GuardSaveInteraction::Survive;
  config.witch_both_potions_same_night = j.at("witch_both_potions_same_night").get<bool>();
  config.hunter_shoots_when_poisoned = j.at("hunter_shoots_when_poisoned").get<bool>();
  config.wolf_win_on_equal = j.at("wolf_win_on_equal").get<bool>();
  config.alpha_guard = j.at("alpha_guard").get<double>();
  config.alpha_wolf = j.at("alpha_wolf").get<double>();
  config.alpha_kre = j.at("alpha_kre").get<double>();
  config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

std::string config_digest(const GameConfig& config) {
  std::uint64_t h = fnv1a(config_to_json(config));
  std::ostringstream oss;
  oss << std::hex << h;
  return oss.str();
}

std::string header_to_json(const LogHeader& header) {
  json j;
  j["kind"] = "header";
  j["schema_version"] = header.schema_version;
  j["game_id"] = header.game_id;
  j["game_seed"] = header.game_seed;
  j["config_digest"] = header.config_digest;
  j["config"] = json::parse(config_to_json(header.config));
  json seats = json::array();
  for (std::size_t seat = 0; seat < header.model_tags.size(); ++seat)
    seats.push_back({{"seat", seat}, {"model", header.model_tags[seat]}});
  j["seats"] = seats;
  return j.dump();
}

LogHeader header_from_json(const std::string& line) {
  json j = json::parse(line);
  if (j.value("kind", "") != "header") throw EngineError("log does not start with a header");
  LogHeader header;
  header.schema_version = j.at("schema_version").get<int>();
  if (header.schema_version != kLogSchemaVersion)
    throw EngineError("unsupported log schema version " +
                      std::to_string(header.schema_version));
  header.game_id = j.at("game_id").get<std::string>();
  header.game_seed = j.at("game_seed").get<std::uint64_t>();
  header.config_digest = j.at("config_digest").get<std::string>();
  header.config = config_from_json(j.at("config").dump());
  header.model_tags.assign(static_cast<std::size_t>(header.config.n_players), "");
  for (const auto& s : j.at("seats")) {
    auto seat = s.at("seat").get<std::size_t>();
    if (seat < header.model_tags.size())
      header.model_tags[seat] = s.at("model").get<std::string>();
  }
  return header;
}

std::string run_error_line(const std::string& reason) {
  json j;
  j["kind"] = "run_error";
  j["error"] = reason;
  return j.dump();
}

void write_game_log(std::ostream& out, const GameLog& log) {
  out << header_to_json(log.header) << "\n";
  for (const auto& ev : log.events) out << event_to_json(ev) << "\n";
  if (log.aborted) out << run_error_line(log.abort_reason) << "\n";
}

GameLog read_game_log(std::istream& in) {
  GameLog log;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      if (!have_header) {
        log.header = header_from_json(line);
        have_header = true;
        continue;
      }
      json j = json::parse(line);
      if (j.value("kind", "") == "run_error") {
        log.aborted = true;
        log.abort_reason = j.value("error", "");
        continue;
      }
      log.events.push_back(event_from_json(line));
    } catch (const std::exception& e) {
      throw EngineError("log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw EngineError("empty log file");
  return log;
}

GameLog read_game_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open log file: " + path);
  return read_game_log(in);
}

void write_game_log_file(const std::string& path, const GameLog& log) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw EngineError("cannot write log file: " + path);
  write_game_log(out, log);
}

}  // namespace wolfarena
