// Tournament execution: builds one agent per seat from the experiment's
// assignment, drives each game request-by-request, threads the experience
// pool into binding votes, and writes one replayable log file per game.
#pragma once

#include <memory>

#include "wolfarena/agents/context.hpp"
#include "wolfarena/agents/prompts.hpp"
#include "wolfarena/arena/experiment.hpp"
#include "wolfarena/engine/game.hpp"
#include "wolfarena/engine/log_io.hpp"

namespace wolfarena {

// One decision-maker, bound to a seat for the duration of a game.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual AgentResponse respond(const ActionRequest& request,
                                const AgentContext& context) = 0;
  // The chat provider behind this agent, when there is one; summaries for
  // the experience pool go through it.
  virtual Provider* provider() { return nullptr; }
};

std::unique_ptr<Agent> make_agent(const ModelSlot& slot, std::uint64_t seed,
                                  std::shared_ptr<Provider> shared_provider);

// Providers are shared across seats and games of one experiment, one handle
// per llm slot.
std::map<std::string, std::shared_ptr<Provider>> build_providers(
    const ExperimentConfig& config);

struct GameRunResult {
  int index = 0;
  std::string log_path;
  bool completed = false;
  std::string error;
};

struct ExperimentResult {
  std::vector<GameRunResult> games;
  int exit_code = 0;  // 0 all games finished, 1 partial failure
};

// Runs one game to completion and returns its log (also written to disk by
// run_experiment). The pool pointer may be null when retrieval is disabled.
GameLog run_single_game(const ExperimentConfig& config, int game_index,
                        const std::map<std::string, std::shared_ptr<Provider>>& providers,
                        ExperiencePool* pool);

ExperimentResult run_experiment(const ExperimentConfig& config);

std::shared_ptr<const Embedder> make_embedder(const PoolSettings& pool);

}  // namespace wolfarena
