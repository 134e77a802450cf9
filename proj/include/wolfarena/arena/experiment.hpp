// Experiment configuration: one JSON document describing the board, the
// number of games, the model slots, who controls which camp or role, the
// experience-pool settings, and the master seed. Unknown keys are rejected
// so a typo never silently changes an experiment.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "wolfarena/engine/types.hpp"
#include "wolfarena/gateway/provider.hpp"
#include "wolfarena/memory/pool.hpp"

namespace wolfarena {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AgentType { Random, Heuristic, Llm };

struct ModelSlot {
  std::string name;  // doubles as the model tag in logs and reports
  AgentType type = AgentType::Random;
  std::string provider_kind = "mock";  // "mock" | "http" (llm slots only)
  HttpProviderConfig http;
  GenerationParams params;
  std::string prompt_dir;  // empty = built-in prompts
};

struct PoolSettings {
  enum class UseFor { None, All, Good, Wolf };
  UseFor use_for = UseFor::None;
  std::string file;  // resolved against the output dir when relative
  RetrievalConfig retrieval;
  bool filter_same_role = false;
  bool filter_same_model = false;
  bool filter_same_player = false;
  std::string embedder_kind = "hashed_bag";  // "hashed_bag" | "http"
  HttpEmbedder::Config http_embedder;

  bool enabled() const { return use_for != UseFor::None; }
  bool applies_to(Camp camp) const {
    switch (use_for) {
      case UseFor::None: return false;
      case UseFor::All: return true;
      case UseFor::Good: return camp == Camp::Good;
      case UseFor::Wolf: return camp == Camp::Wolf;
    }
    return false;
  }
};

struct ExperimentConfig {
  GameConfig game;  // seed field unused; per-game seeds derive from master_seed
  int n_games = 10;
  std::uint64_t master_seed = 0;
  std::string output_dir = "out";
  int max_parallel_games = 1;
  std::string matchup;  // derived from the assignment when empty

  std::map<std::string, ModelSlot> slots;
  std::string assign_default;
  std::map<Camp, std::string> assign_camp;
  std::map<Role, std::string> assign_role;

  PoolSettings pool;

  const ModelSlot& slot_for_role(Role role) const;
  std::string resolved_matchup() const;
  std::string pool_path() const;  // pool file resolved against output_dir
  void validate() const;          // throws ConfigError listing the violation
};

ExperimentConfig experiment_from_json(const std::string& text);
std::string experiment_to_json(const ExperimentConfig& config);
ExperimentConfig load_experiment(const std::string& path);

}  // namespace wolfarena
