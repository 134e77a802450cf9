// The cross-game experience pool. Each entry is one per-seat debate summary
// written right before a binding vote, embedded eagerly and rewarded once
// its game finishes: winners get 1000 minus the game's total rounds, losers
// get the total rounds. Retrieval filters finalized entries by tag and by a
// similarity threshold, then returns the top-k by reward.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "wolfarena/memory/embed.hpp"

namespace wolfarena {

struct ExperienceTags {
  int player_seat = -1;
  Role role = Role::Villager;
  std::string model_tag;
  std::string game_id;
  int round = 0;
};

struct Experience {
  std::int64_t id = 0;  // insertion order; larger = more recent
  std::string summary;
  Eigen::VectorXd embedding;
  std::optional<double> reward;  // absent until the game finishes
  ExperienceTags tags;
};

// Optional exact-match restriction over the searchable tags.
struct TagFilter {
  std::optional<int> player_seat;
  std::optional<Role> role;
  std::optional<std::string> model_tag;

  bool matches(const ExperienceTags& tags) const {
    if (player_seat && *player_seat != tags.player_seat) return false;
    if (role && *role != tags.role) return false;
    if (model_tag && *model_tag != tags.model_tag) return false;
    return true;
  }
};

struct RetrievalConfig {
  int k = 3;
  double threshold = 0.5;
  std::optional<TagFilter> tag_filter;

  void validate() const;
};

struct GameOutcomeRecord {
  std::string game_id;
  Camp winner = Camp::Good;
  int total_rounds = 1;
};

inline constexpr int kPoolSchemaVersion = 1;

class ExperiencePool {
 public:
  explicit ExperiencePool(std::shared_ptr<const Embedder> embedder);

  // Stores the summary with its embedding computed eagerly; the reward stays
  // pending until finalize_rewards. Throws on an empty summary.
  std::int64_t add(const std::string& summary, const ExperienceTags& tags);

  // Appends an existing experience verbatim (reward included) under a fresh
  // id; the import/export path.
  std::int64_t append(Experience entry);

  // Applies the end-of-game reward to every experience of the game: winners
  // 1000 - total_rounds, losers total_rounds. Throws when the game is
  // unknown or already finalized.
  void finalize_rewards(const GameOutcomeRecord& outcome, const std::set<int>& winner_seats);

  // Finalized entries whose tag matches and whose cosine similarity to the
  // query meets the threshold, ordered by reward descending, then similarity
  // descending, then recency descending; at most k of them.
  std::vector<Experience> retrieve(const std::string& query,
                                   const RetrievalConfig& config) const;

  std::size_t size() const;
  std::vector<Experience> snapshot() const;
  const Embedder& embedder() const { return *embedder_; }

  void save(const std::string& path) const;
  void load(const std::string& path);         // replaces current contents
  std::size_t import_from(const std::string& path);  // merges, assigns fresh ids
  std::size_t export_to(const std::string& path, const TagFilter& filter) const;

 private:
  std::int64_t add_locked(Experience entry);

  mutable std::shared_mutex mutex_;
  std::vector<Experience> entries_;
  std::shared_ptr<const Embedder> embedder_;
  std::int64_t next_id_ = 1;
};

}  // namespace wolfarena
