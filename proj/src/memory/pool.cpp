#include "wolfarena/memory/pool.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace wolfarena {

using json = nlohmann::json;

void RetrievalConfig::validate() const {
  if (k < 1) throw EngineError("retrieval k must be >= 1");
  if (threshold < 0.0 || threshold > 1.0)
    throw EngineError("retrieval threshold must lie in [0,1]");
}

ExperiencePool::ExperiencePool(std::shared_ptr<const Embedder> embedder)
    : embedder_(std::move(embedder)) {
  if (!embedder_) throw EngineError("experience pool needs an embedder");
}

std::int64_t ExperiencePool::add(const std::string& summary, const ExperienceTags& tags) {
  if (summary.empty()) throw EngineError("experience summary must be nonempty");
  Experience entry;
  entry.summary = summary;
  entry.embedding = embedder_->embed(summary);
  entry.tags = tags;
  std::unique_lock lock(mutex_);
  return add_locked(std::move(entry));
}

std::int64_t ExperiencePool::add_locked(Experience entry) {
  entry.id = next_id_++;
  entries_.push_back(std::move(entry));
  return entries_.back().id;
}

std::int64_t ExperiencePool::append(Experience entry) {
  std::unique_lock lock(mutex_);
  return add_locked(std::move(entry));
}

void ExperiencePool::finalize_rewards(const GameOutcomeRecord& outcome,
                                      const std::set<int>& winner_seats) {
  std::unique_lock lock(mutex_);
  bool found = false;
  for (const auto& e : entries_) {
    if (e.tags.game_id != outcome.game_id) continue;
    found = true;
    if (e.reward)
      throw EngineError("rewards for game " + outcome.game_id + " already finalized");
  }
  if (!found) throw EngineError("no experiences recorded for game " + outcome.game_id);
  for (auto& e : entries_) {
    if (e.tags.game_id != outcome.game_id) continue;
    bool won = winner_seats.count(e.tags.player_seat) > 0;
    e.reward = won ? 1000.0 - outcome.total_rounds : static_cast<double>(outcome.total_rounds);
  }
}

std::vector<Experience> ExperiencePool::retrieve(const std::string& query,
                                                 const RetrievalConfig& config) const {
  config.validate();
  Eigen::VectorXd query_vec = embedder_->embed(query);

  struct Candidate {
    const Experience* entry;
    double similarity;
  };
  std::vector<Candidate> candidates;
  {
    std::shared_lock lock(mutex_);
    for (const auto& e : entries_) {
      if (!e.reward) continue;  // pending experiences are never retrievable
      if (config.tag_filter && !config.tag_filter->matches(e.tags)) continue;
      double sim = cosine(query_vec, e.embedding);
      if (sim >= config.threshold) candidates.push_back({&e, sim});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (*a.entry->reward != *b.entry->reward)
                  return *a.entry->reward > *b.entry->reward;
                if (a.similarity != b.similarity) return a.similarity > b.similarity;
                return a.entry->id > b.entry->id;
              });
    std::vector<Experience> result;
    for (const auto& c : candidates) {
      if (static_cast<int>(result.size()) >= config.k) break;
      result.push_back(*c.entry);
    }
    return result;
  }
}

std::size_t ExperiencePool::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

std::vector<Experience> ExperiencePool::snapshot() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

namespace {

json experience_to_json(const Experience& e) {
  json j;
  j["id"] = e.id;
  j["summary"] = e.summary;
  json emb = json::array();
  for (Eigen::Index i = 0; i < e.embedding.size(); ++i) emb.push_back(e.embedding[i]);
  j["embedding"] = emb;
  j["reward"] = e.reward ? json(*e.reward) : json(nullptr);
  j["player"] = e.tags.player_seat;
  j["role"] = role_name(e.tags.role);
  j["model"] = e.tags.model_tag;
  j["game_id"] = e.tags.game_id;
  j["round"] = e.tags.round;
  return j;
}

Experience experience_from_json(const json& j) {
  Experience e;
  e.id = j.at("id").get<std::int64_t>();
  e.summary = j.at("summary").get<std::string>();
  const auto& emb = j.at("embedding");
  e.embedding.resize(static_cast<Eigen::Index>(emb.size()));
  for (Eigen::Index i = 0; i < e.embedding.size(); ++i)
    e.embedding[i] = emb[static_cast<std::size_t>(i)].get<double>();
  if (!j.at("reward").is_null()) e.reward = j.at("reward").get<double>();
  e.tags.player_seat = j.at("player").get<int>();
  e.tags.role = role_from_name(j.at("role").get<std::string>());
  e.tags.model_tag = j.at("model").get<std::string>();
  e.tags.game_id = j.at("game_id").get<std::string>();
  e.tags.round = j.at("round").get<int>();
  return e;
}

}  // namespace

void ExperiencePool::save(const std::string& path) const {
  std::shared_lock lock(mutex_);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw EngineError("cannot write pool file: " + path);
  json header{{"kind", "header"},
              {"schema_version", kPoolSchemaVersion},
              {"embedder", embedder_->name()}};
  out << header.dump() << "\n";
  for (const auto& e : entries_) out << experience_to_json(e).dump() << "\n";
}

void ExperiencePool::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open pool file: " + path);
  std::vector<Experience> loaded;
  std::string line;
  int line_no = 0;
  std::int64_t max_id = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      if (!have_header) {
        if (j.value("kind", "") != "header")
          throw EngineError("pool file does not start with a header");
        if (j.at("schema_version").get<int>() != kPoolSchemaVersion)
          throw EngineError("unsupported pool schema version");
        have_header = true;
        continue;
      }
      Experience e = experience_from_json(j);
      max_id = std::max(max_id, e.id);
      loaded.push_back(std::move(e));
    } catch (const std::exception& err) {
      throw EngineError("pool line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (!have_header) throw EngineError("empty pool file");
  std::unique_lock lock(mutex_);
  entries_ = std::move(loaded);
  next_id_ = max_id + 1;
}

std::size_t ExperiencePool::import_from(const std::string& path) {
  ExperiencePool incoming(embedder_);
  incoming.load(path);
  auto entries = incoming.snapshot();
  std::unique_lock lock(mutex_);
  for (auto& e : entries) add_locked(std::move(e));
  return entries.size();
}

std::size_t ExperiencePool::export_to(const std::string& path,
                                      const TagFilter& filter) const {
  ExperiencePool subset(embedder_);
  std::size_t kept = 0;
  for (const auto& e : snapshot()) {
    if (!filter.matches(e.tags)) continue;
    subset.append(e);
    ++kept;
  }
  subset.save(path);
  return kept;
}

}  // namespace wolfarena
