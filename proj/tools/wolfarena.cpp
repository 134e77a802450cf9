// wolfarena - seeded werewolf tournaments for scripted and chat-model
// agents: run experiments, verify logs by replay, build metric reports,
// move experience pools between experiments.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wolfarena/arena/replay.hpp"
#include "wolfarena/arena/runner.hpp"
#include "wolfarena/metrics/report.hpp"

namespace fs = std::filesystem;
using namespace wolfarena;

namespace {

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::string> out_dir, std::optional<int> parallel,
            std::optional<int> games) {
  ExperimentConfig config = load_experiment(config_path);
  if (seed) config.master_seed = *seed;
  if (out_dir) config.output_dir = *out_dir;
  if (parallel) config.max_parallel_games = *parallel;
  if (games) config.n_games = *games;
  config.validate();

  ExperimentResult result = run_experiment(config);
  for (const auto& g : result.games) {
    if (g.completed)
      std::cout << "game " << g.index << ": ok  " << g.log_path << "\n";
    else
      std::cout << "game " << g.index << ": FAILED (" << g.error << ")\n";
  }
  std::cout << (result.exit_code == 0 ? "all games completed\n"
                                      : "some games failed; logs flagged\n");
  return result.exit_code;
}

int cmd_replay(const std::vector<std::string>& paths) {
  int failures = 0;
  for (const auto& path : paths) {
    ReplayResult r = replay_file(path);
    std::cout << (r.passed ? "PASS " : "FAIL ") << path;
    if (!r.passed) {
      std::cout << " — " << r.message;
      if (r.divergence_index) std::cout << " [event " << *r.divergence_index << "]";
      ++failures;
    }
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}

std::vector<GameLogView> load_views(const std::string& dir, MetricsOptions* opts) {
  std::vector<GameLogView> views;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".jsonl" &&
        entry.path().filename().string().rfind("game_", 0) == 0)
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    try {
      GameLog log = read_game_log_file(path.string());
      if (log.aborted) {
        std::cerr << "warning: skipping aborted log " << path << "\n";
        continue;
      }
      GameLogView view(std::move(log));
      if (!view.finished()) {
        std::cerr << "warning: skipping unfinished log " << path << "\n";
        continue;
      }
      if (opts) {
        opts->alpha_guard = view.log().header.config.alpha_guard;
        opts->alpha_wolf = view.log().header.config.alpha_wolf;
        opts->alpha_kre = view.log().header.config.alpha_kre;
      }
      views.push_back(std::move(view));
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping corrupt log " << path << ": " << e.what() << "\n";
    }
  }
  return views;
}

int cmd_report(const std::string& dir, const std::string& ablation_dir,
               const std::string& out_dir) {
  MetricsOptions opts;
  auto views = load_views(dir, &opts);
  if (views.empty()) {
    std::cerr << "no usable logs in " << dir << "\n";
    return 1;
  }
  MetricReport report = build_report(views, fs::path(dir).filename().string(), opts);

  fs::path out = out_dir.empty() ? fs::path(dir) : fs::path(out_dir);
  fs::create_directories(out);
  std::ofstream(out / "report.json") << report_to_json(report) << "\n";
  std::string text = render_report_text(report);
  if (!ablation_dir.empty()) {
    auto variant_views = load_views(ablation_dir, nullptr);
    if (variant_views.empty()) {
      std::cerr << "no usable logs in " << ablation_dir << "\n";
      return 1;
    }
    MetricReport variant =
        build_report(variant_views, fs::path(ablation_dir).filename().string(), opts);
    std::ofstream(out / "report_ablation.json") << report_to_json(variant) << "\n";
    text += "\n" + render_ablation_text(report, variant);
  }
  std::ofstream(out / "report.txt") << text;
  std::cout << text;
  return 0;
}

int cmd_pool_export(const std::string& pool_path, const std::string& out_path,
                    std::optional<std::string> model, std::optional<std::string> role,
                    std::optional<int> player) {
  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  pool.load(pool_path);
  TagFilter filter;
  if (model) filter.model_tag = *model;
  if (role) filter.role = role_from_name(*role);
  if (player) filter.player_seat = *player;
  std::size_t kept = pool.export_to(out_path, filter);
  std::cout << "exported " << kept << " of " << pool.size() << " experiences to "
            << out_path << "\n";
  return 0;
}

int cmd_pool_import(const std::string& pool_path, const std::string& from_path) {
  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  if (fs::exists(pool_path)) pool.load(pool_path);
  std::size_t added = pool.import_from(from_path);
  pool.save(pool_path);
  std::cout << "imported " << added << " experiences into " << pool_path << " (now "
            << pool.size() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wolfarena: a rule-exact werewolf arena for benchmarking agents"};
  app.require_subcommand(1);

  // run
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> parallel, games;
  auto* run = app.add_subcommand("run", "run a seeded experiment");
  run->add_option("-c,--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--seed", seed, "override the master seed");
  run->add_option("--out", out_dir, "override the output directory");
  run->add_option("--parallel", parallel, "max games in flight");
  run->add_option("--games", games, "override the number of games");

  // replay
  std::vector<std::string> replay_paths;
  auto* replay = app.add_subcommand("replay", "verify logs by deterministic replay");
  replay->add_option("logs", replay_paths, "log files")->required();

  // report
  std::string report_dir, ablation_dir, report_out;
  auto* report = app.add_subcommand("report", "build metric reports from logs");
  report->add_option("dir", report_dir, "directory of game logs")->required();
  report->add_option("--ablation", ablation_dir, "second directory for a paired table");
  report->add_option("--out", report_out, "output directory (default: the log dir)");

  // pool export / import
  auto* pool = app.add_subcommand("pool", "experience pool utilities");
  pool->require_subcommand(1);
  std::string pool_file, pool_out, pool_from;
  std::optional<std::string> filter_model, filter_role;
  std::optional<int> filter_player;
  auto* pexport = pool->add_subcommand("export", "export (a subset of) a pool file");
  pexport->add_option("pool", pool_file, "pool file")->required();
  pexport->add_option("--out", pool_out, "destination file")->required();
  pexport->add_option("--model", filter_model, "keep only this model tag");
  pexport->add_option("--role", filter_role, "keep only this role");
  pexport->add_option("--player", filter_player, "keep only this seat");
  auto* pimport = pool->add_subcommand("import", "merge a pool file into another");
  pimport->add_option("pool", pool_file, "pool file to grow")->required();
  pimport->add_option("--from", pool_from, "pool file to merge in")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(config_path, seed, out_dir, parallel, games);
    if (*replay) return cmd_replay(replay_paths);
    if (*report) return cmd_report(report_dir, ablation_dir, report_out);
    if (*pexport)
      return cmd_pool_export(pool_file, pool_out, filter_model, filter_role,
                             filter_player);
    if (*pimport) return cmd_pool_import(pool_file, pool_from);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
