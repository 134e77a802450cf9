// Multi-game aggregation into per-model report rows, with JSON and aligned
// plain-text renderings; two reports render side by side for ablations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wolfarena/metrics/scores.hpp"

namespace wolfarena {

struct MetricRow {
  std::string model_tag;
  std::string matchup;
  int games = 0;  // games in which the model controlled at least one seat
  std::optional<double> seer, witch, hunter, guard, werewolf;
  std::optional<double> sheriff_good, sheriff_bad;
  std::optional<double> irp, kre, vss;
};

struct MetricReport {
  std::string matchup;
  std::vector<MetricRow> rows;
};

MetricReport build_report(const std::vector<GameLogView>& logs,
                          const std::string& matchup,
                          const MetricsOptions& opts = {});

std::string report_to_json(const MetricReport& report);
std::string render_report_text(const MetricReport& report);

// Paired base-vs-variant table; variant columns carry a '*' suffix.
std::string render_ablation_text(const MetricReport& base, const MetricReport& variant);

}  // namespace wolfarena
