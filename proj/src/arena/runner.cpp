#include "wolfarena/arena/runner.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "wolfarena/agents/baseline.hpp"
#include "wolfarena/agents/grammar.hpp"
#include "wolfarena/agents/mock_reply.hpp"
#include "wolfarena/engine/rng.hpp"
#include "wolfarena/memory/summarize.hpp"

namespace wolfarena {

namespace {

class BaselineAgent final : public Agent {
 public:
  BaselineAgent(BaselineKind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  AgentResponse respond(const ActionRequest& request, const AgentContext& context) override {
    return baseline_policy(kind_, request, context, seed_);
  }

 private:
  BaselineKind kind_;
  std::uint64_t seed_;
};

class LlmAgent final : public Agent {
 public:
  LlmAgent(std::shared_ptr<Provider> provider, GenerationParams params, PromptSet prompts)
      : provider_(std::move(provider)), params_(params), prompts_(std::move(prompts)) {}

  AgentResponse respond(const ActionRequest& request, const AgentContext& context) override {
    ChatTranscript transcript = prompt_transcript(context, prompts_);
    for (int attempt = 0; attempt <= kMaxRequeries; ++attempt) {
      std::string raw = provider_->complete(transcript, params_);
      ParseOutcome outcome = parse_response(raw, request);
      if (parse_ok(outcome)) return std::get<AgentResponse>(outcome);
      // Re-query with the parser's complaint appended so a capable model can
      // correct itself; a scripted mock will just fail again and fall back.
      transcript.messages.push_back({MessageRole::Assistant, raw});
      transcript.messages.push_back(
          {MessageRole::User, "Your reply could not be used: " +
                                  std::get<ParseError>(outcome).reason +
                                  ". Answer again in exactly the requested format."});
    }
    return deterministic_fallback(request);
  }

  Provider* provider() override { return provider_.get(); }

 private:
  std::shared_ptr<Provider> provider_;
  GenerationParams params_;
  PromptSet prompts_;
};

}  // namespace

std::unique_ptr<Agent> make_agent(const ModelSlot& slot, std::uint64_t seed,
                                  std::shared_ptr<Provider> shared_provider) {
  switch (slot.type) {
    case AgentType::Random:
      return std::make_unique<BaselineAgent>(BaselineKind::Random, seed);
    case AgentType::Heuristic:
      return std::make_unique<BaselineAgent>(BaselineKind::Heuristic, seed);
    case AgentType::Llm: {
      if (!shared_provider)
        throw ConfigError("llm slot \"" + slot.name + "\" has no provider handle");
      PromptSet prompts = slot.prompt_dir.empty()
                              ? PromptSet::builtin()
                              : PromptSet::from_directory(slot.prompt_dir);
      return std::make_unique<LlmAgent>(std::move(shared_provider), slot.params,
                                        std::move(prompts));
    }
  }
  throw ConfigError("unknown agent type");
}

std::map<std::string, std::shared_ptr<Provider>> build_providers(
    const ExperimentConfig& config) {
  std::map<std::string, std::shared_ptr<Provider>> providers;
  for (const auto& [name, slot] : config.slots) {
    if (slot.type != AgentType::Llm) continue;
    if (slot.provider_kind == "mock") {
      auto mock = std::make_shared<MockProvider>();
      mock->set_reply_fn(scripted_player_fn());
      providers[name] = mock;
    } else {
      providers[name] = std::make_shared<HttpProvider>(slot.http);
    }
  }
  return providers;
}

std::shared_ptr<const Embedder> make_embedder(const PoolSettings& pool) {
  if (pool.embedder_kind == "http")
    throw ConfigError("http embedder needs a live transport; construct the pool "
                      "explicitly for that setup");
  return std::make_shared<HashedBagEmbedder>();
}

GameLog run_single_game(const ExperimentConfig& config, int game_index,
                        const std::map<std::string, std::shared_ptr<Provider>>& providers,
                        ExperiencePool* pool) {
  GameConfig game_config = config.game;
  game_config.seed = mix_seed(config.master_seed, static_cast<std::uint64_t>(game_index));
  Game game(game_config);

  char game_id[32];
  std::snprintf(game_id, sizeof(game_id), "game_%03d", game_index);

  std::vector<std::string> tags(static_cast<std::size_t>(game_config.n_players));
  std::vector<std::unique_ptr<Agent>> agents(tags.size());
  for (int seat = 0; seat < game_config.n_players; ++seat) {
    const ModelSlot& slot = config.slot_for_role(game.state().role(seat));
    tags[static_cast<std::size_t>(seat)] = slot.name;
    std::shared_ptr<Provider> provider;
    auto pit = providers.find(slot.name);
    if (pit != providers.end()) provider = pit->second;
    agents[static_cast<std::size_t>(seat)] =
        make_agent(slot, mix_seed(game_config.seed, static_cast<std::uint64_t>(seat)),
                   std::move(provider));
  }

  GameLog log;
  log.header.game_id = game_id;
  log.header.game_seed = game_config.seed;
  log.header.config = game_config;
  log.header.config_digest = config_digest(game_config);
  log.header.model_tags = tags;
  log.events = game.events();

  bool added_experience = false;
  while (!game.finished()) {
    auto requests = game.pending_requests();
    if (requests.empty()) throw EngineError("engine stalled with no pending requests");
    std::vector<AgentResponse> responses;
    responses.reserve(requests.size());
    for (const auto& request : requests) {
      Agent& agent = *agents[static_cast<std::size_t>(request.seat)];
      std::vector<Experience> retrieved;
      std::string summary;
      // Experience retrieval feeds only the binding exile votes, and only
      // for seats the pool is switched on for.
      bool binding_vote = request.kind == RequestKind::OfficialBallot ||
                          request.kind == RequestKind::TiebreakBallot;
      Camp camp = game.state().camp(request.seat);
      if (pool && binding_vote && config.pool.applies_to(camp)) {
        auto visible = visible_transcript(request.seat, game.state().role(request.seat),
                                          game.events());
        summary = agent.provider() ? summarize(visible, *agent.provider())
                                   : local_summary(visible);
        ExperienceTags xtags;
        xtags.player_seat = request.seat;
        xtags.role = game.state().role(request.seat);
        xtags.model_tag = tags[static_cast<std::size_t>(request.seat)];
        xtags.game_id = game_id;
        xtags.round = game.state().round;
        pool->add(summary, xtags);
        added_experience = true;

        RetrievalConfig retrieval = config.pool.retrieval;
        if (config.pool.filter_same_role || config.pool.filter_same_model ||
            config.pool.filter_same_player) {
          TagFilter filter;
          if (config.pool.filter_same_role) filter.role = xtags.role;
          if (config.pool.filter_same_model) filter.model_tag = xtags.model_tag;
          if (config.pool.filter_same_player) filter.player_seat = xtags.player_seat;
          retrieval.tag_filter = filter;
        }
        retrieved = pool->retrieve(summary, retrieval);
      }
      AgentContext context = build_context(game.state(), request.seat, game.events(),
                                           request, std::move(retrieved), summary);
      responses.push_back(agent.respond(request, context));
    }
    auto produced = game.submit(responses);
    log.events.insert(log.events.end(), produced.begin(), produced.end());
  }

  if (pool && added_experience) {
    GameOutcomeRecord outcome;
    outcome.game_id = game_id;
    outcome.winner = *game.winner();
    outcome.total_rounds = game.state().round;
    std::set<int> winners;
    for (int seat = 0; seat < game_config.n_players; ++seat)
      if (game.state().camp(seat) == outcome.winner) winners.insert(seat);
    pool->finalize_rewards(outcome, winners);
  }
  return log;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::filesystem::create_directories(config.output_dir);

  auto providers = build_providers(config);

  std::unique_ptr<ExperiencePool> pool;
  if (config.pool.enabled()) {
    pool = std::make_unique<ExperiencePool>(make_embedder(config.pool));
    if (std::filesystem::exists(config.pool_path())) pool->load(config.pool_path());
  }

  ExperimentResult result;
  result.games.resize(static_cast<std::size_t>(config.n_games));

  // Later games learn from earlier ones through the pool, so pooled
  // experiments run strictly in order; without the pool, games share
  // nothing and parallelize freely.
  int parallelism = config.pool.enabled()
                        ? 1
                        : std::min(config.max_parallel_games, config.n_games);

  std::atomic<int> next_index{0};
  std::mutex pool_io_mutex;
  auto worker = [&] {
    for (;;) {
      int index = next_index.fetch_add(1);
      if (index >= config.n_games) return;
      auto& slot = result.games[static_cast<std::size_t>(index)];
      slot.index = index;
      char name[32];
      std::snprintf(name, sizeof(name), "game_%03d.jsonl", index);
      slot.log_path = (std::filesystem::path(config.output_dir) / name).string();
      try {
        GameLog log = run_single_game(config, index, providers, pool.get());
        write_game_log_file(slot.log_path, log);
        slot.completed = true;
        if (pool) {
          std::lock_guard<std::mutex> lock(pool_io_mutex);
          pool->save(config.pool_path());
        }
      } catch (const std::exception& e) {
        // A dead provider must not void the experiment: flag this game and
        // keep going. The partial log carries a run_error marker.
        slot.completed = false;
        slot.error = e.what();
        GameLog partial;
        partial.aborted = true;
        partial.abort_reason = e.what();
        GameConfig game_config = config.game;
        game_config.seed = mix_seed(config.master_seed, static_cast<std::uint64_t>(index));
        partial.header.game_id = std::string(name, std::strlen(name) - 6);
        partial.header.game_seed = game_config.seed;
        partial.header.config = game_config;
        partial.header.config_digest = config_digest(game_config);
        partial.header.model_tags.assign(static_cast<std::size_t>(game_config.n_players),
                                         "");
        try {
          write_game_log_file(slot.log_path, partial);
        } catch (const std::exception&) {
          // nothing else to do; the result entry records the failure
        }
      }
    }
  };

  if (parallelism <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < parallelism; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  for (const auto& g : result.games)
    if (!g.completed) result.exit_code = 1;
  return result;
}

}  // namespace wolfarena
