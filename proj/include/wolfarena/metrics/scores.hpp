// The metric suite: six character scores (seer, witch, hunter, guard,
// sheriff influence, werewolf) and three player scores (IRP, KRE, VSS),
// all in [0,1] by construction. Ratios whose denominator never materialized
// (no potion used, no shot fired) come back absent instead of zero, so an
// unexercised skill is not punished in aggregation.
#pragma once

#include <optional>

#include "wolfarena/metrics/logview.hpp"

namespace wolfarena {

struct MetricsOptions {
  double alpha_guard = 0.5;
  double alpha_wolf = 0.5;
  double alpha_kre = 0.5;
  // Literal variant of the guard indicator: reward the guard when the
  // guarded player was eliminated that night, instead of when the guard
  // blocked the kill.
  bool guard_literal_elimination = false;
};

// Per-seat character scores for one game. Absent when undefined for that
// seat (wrong role, skill never exercised).
std::optional<double> seer_score_for(const GameLogView& log, int seat);
std::optional<double> witch_score_for(const GameLogView& log, int seat);
std::optional<double> hunter_score_for(const GameLogView& log, int seat);
std::optional<double> guard_score_for(const GameLogView& log, int seat,
                                      const MetricsOptions& opts);
double werewolf_score(const GameLogView& log, int wolf_seat, double alpha_wolf);

// Single-instance wrappers over the game's unique god seat.
std::optional<double> seer_score(const GameLogView& log);
std::optional<double> witch_score(const GameLogView& log);
std::optional<double> hunter_score(const GameLogView& log);
std::optional<double> guard_score(const GameLogView& log, const MetricsOptions& opts);

// Fraction of non-sheriff binding ballots that switched away from the
// voter's pseudo ballot onto the sheriff's recommendation, over all games
// where a player of the model held the badge in the given camp.
std::optional<double> sheriff_influence(const std::vector<GameLogView>& logs,
                                        const std::string& sheriff_model,
                                        Camp sheriff_camp);

// Player metrics pooled over all games a model took part in.
std::optional<double> irp(const std::vector<GameLogView>& logs,
                          const std::string& model_tag);
std::optional<double> kre(const std::vector<GameLogView>& logs,
                          const std::string& model_tag, const MetricsOptions& opts);
std::optional<double> vss(const std::vector<GameLogView>& logs,
                          const std::string& model_tag);

}  // namespace wolfarena
