#include "wolfarena/metrics/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wolfarena {

using json = nlohmann::json;

namespace {

// Mean of the defined per-instance values; absent when none is defined.
struct Averager {
  double sum = 0.0;
  int n = 0;
  void add(std::optional<double> v) {
    if (!v) return;
    sum += *v;
    ++n;
  }
  std::optional<double> mean() const {
    if (n == 0) return std::nullopt;
    return sum / n;
  }
};

std::string cell(std::optional<double> v) {
  if (!v) return "—";
  std::ostringstream oss;
  oss << std::fixed << std::setprecision(3) << *v;
  return oss.str();
}

}  // namespace

MetricReport build_report(const std::vector<GameLogView>& logs,
                          const std::string& matchup, const MetricsOptions& opts) {
  if (logs.empty()) throw EngineError("no logs to report on");
  MetricReport report;
  report.matchup = matchup;

  std::set<std::string> models;
  for (const auto& log : logs)
    for (int seat = 0; seat < log.n_players(); ++seat) models.insert(log.model_tag(seat));

  for (const auto& model : models) {
    MetricRow row;
    row.model_tag = model;
    row.matchup = matchup;
    Averager seer, witch, hunter, guard, wolf;
    for (const auto& log : logs) {
      bool participates = false;
      for (int seat = 0; seat < log.n_players(); ++seat) {
        if (log.model_tag(seat) != model) continue;
        participates = true;
        switch (log.role(seat)) {
          case Role::Seer: seer.add(seer_score_for(log, seat)); break;
          case Role::Witch: witch.add(witch_score_for(log, seat)); break;
          case Role::Hunter: hunter.add(hunter_score_for(log, seat)); break;
          case Role::Guard: guard.add(guard_score_for(log, seat, opts)); break;
          case Role::Werewolf:
            wolf.add(werewolf_score(log, seat, opts.alpha_wolf));
            break;
          case Role::Villager: break;
        }
      }
      if (participates) ++row.games;
    }
    row.seer = seer.mean();
    row.witch = witch.mean();
    row.hunter = hunter.mean();
    row.guard = guard.mean();
    row.werewolf = wolf.mean();
    row.sheriff_good = sheriff_influence(logs, model, Camp::Good);
    row.sheriff_bad = sheriff_influence(logs, model, Camp::Wolf);
    row.irp = irp(logs, model);
    row.kre = kre(logs, model, opts);
    row.vss = vss(logs, model);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string report_to_json(const MetricReport& report) {
  json rows = json::array();
  auto put = [](json& j, const char* key, const std::optional<double>& v) {
    j[key] = v ? json(*v) : json(nullptr);
  };
  for (const auto& row : report.rows) {
    json j;
    j["model"] = row.model_tag;
    j["matchup"] = row.matchup;
    j["games"] = row.games;
    put(j, "seer", row.seer);
    put(j, "witch", row.witch);
    put(j, "hunter", row.hunter);
    put(j, "guard", row.guard);
    put(j, "werewolf", row.werewolf);
    put(j, "sheriff_good", row.sheriff_good);
    put(j, "sheriff_bad", row.sheriff_bad);
    put(j, "irp", row.irp);
    put(j, "kre", row.kre);
    put(j, "vss", row.vss);
    rows.push_back(std::move(j));
  }
  json out;
  out["matchup"] = report.matchup;
  out["rows"] = rows;
  return out.dump(2);
}

namespace {

std::string render_table(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> widths;
  for (const auto& row : table) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream oss;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      oss << std::left << std::setw(static_cast<int>(widths[i]) + 2) << row[i];
    }
    oss << "\n";
  }
  return oss.str();
}

}  // namespace

std::string render_report_text(const MetricReport& report) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"model", "games", "seer", "witch", "hunter", "guard", "werewolf",
                   "sheriff(good)", "sheriff(bad)", "irp", "kre", "vss"});
  for (const auto& row : report.rows) {
    table.push_back({row.model_tag, std::to_string(row.games), cell(row.seer),
                     cell(row.witch), cell(row.hunter), cell(row.guard),
                     cell(row.werewolf), cell(row.sheriff_good), cell(row.sheriff_bad),
                     cell(row.irp), cell(row.kre), cell(row.vss)});
  }
  std::ostringstream oss;
  oss << "matchup: " << report.matchup << "\n" << render_table(table);
  return oss.str();
}

std::string render_ablation_text(const MetricReport& base, const MetricReport& variant) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"model", "sheriff(good)", "sheriff(bad)", "vss", "irp", "kre",
                   "sheriff(good)*", "sheriff(bad)*", "vss*", "irp*", "kre*"});
  std::set<std::string> models;
  for (const auto& r : base.rows) models.insert(r.model_tag);
  for (const auto& r : variant.rows) models.insert(r.model_tag);
  auto find_row = [](const MetricReport& rep, const std::string& model) -> const MetricRow* {
    for (const auto& r : rep.rows)
      if (r.model_tag == model) return &r;
    return nullptr;
  };
  for (const auto& model : models) {
    const MetricRow* a = find_row(base, model);
    const MetricRow* b = find_row(variant, model);
    auto c = [&](const MetricRow* r, std::optional<double> MetricRow::*field) {
      return r ? cell(r->*field) : std::string("—");
    };
    table.push_back({model, c(a, &MetricRow::sheriff_good), c(a, &MetricRow::sheriff_bad),
                     c(a, &MetricRow::vss), c(a, &MetricRow::irp), c(a, &MetricRow::kre),
                     c(b, &MetricRow::sheriff_good), c(b, &MetricRow::sheriff_bad),
                     c(b, &MetricRow::vss), c(b, &MetricRow::irp), c(b, &MetricRow::kre)});
  }
  std::ostringstream oss;
  oss << "ablation: " << base.matchup << " (base) vs " << variant.matchup
      << " (*)\n" << render_table(table);
  return oss.str();
}

}  // namespace wolfarena
