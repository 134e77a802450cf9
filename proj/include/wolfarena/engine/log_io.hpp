// Game log files: one header line followed by one event per line, all JSON.
// The header pins the schema version, the resolved config, its digest, the
// game seed, and the per-seat model tags; metrics and replay consume exactly
// this file and nothing else.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wolfarena/engine/event.hpp"
#include "wolfarena/engine/types.hpp"

namespace wolfarena {

inline constexpr int kLogSchemaVersion = 1;

struct LogHeader {
  int schema_version = kLogSchemaVersion;
  std::string game_id;
  std::uint64_t game_seed = 0;
  std::string config_digest;
  GameConfig config;
  std::vector<std::string> model_tags;  // per seat
};

struct GameLog {
  LogHeader header;
  std::vector<GameEvent> events;
  bool aborted = false;       // a trailing run_error line was present
  std::string abort_reason;
};

std::string config_to_json(const GameConfig& config);
GameConfig config_from_json(const std::string& text);

// FNV-1a over the canonical JSON dump of the resolved config, in hex.
std::string config_digest(const GameConfig& config);

std::string header_to_json(const LogHeader& header);
LogHeader header_from_json(const std::string& line);

// Marker line appended when a game aborts mid-run (provider failure, ...).
std::string run_error_line(const std::string& reason);

void write_game_log(std::ostream& out, const GameLog& log);
GameLog read_game_log(std::istream& in);          // throws EngineError with line number
GameLog read_game_log_file(const std::string& path);
void write_game_log_file(const std::string& path, const GameLog& log);

}  // namespace wolfarena
