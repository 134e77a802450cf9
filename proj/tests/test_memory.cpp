#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "test_support.hpp"
#include "wolfarena/memory/summarize.hpp"

using namespace wolfarena;
using namespace wolfarena::testing;

TEST_SUITE_BEGIN("memory");

namespace {

ExperienceTags tags_for(int seat, const std::string& game_id, int round = 1,
                        Role role = Role::Villager) {
  ExperienceTags t;
  t.player_seat = seat;
  t.role = role;
  t.model_tag = "m";
  t.game_id = game_id;
  t.round = round;
  return t;
}

// Exhaustive-scan retrieval oracle: filter, threshold, then total order by
// (reward desc, similarity desc, id desc), truncated to k.
std::vector<std::int64_t> oracle_retrieve(const std::vector<Experience>& entries,
                                          const Eigen::VectorXd& query,
                                          const RetrievalConfig& config) {
  struct Row {
    double reward;
    double similarity;
    std::int64_t id;
  };
  std::vector<Row> rows;
  for (const auto& e : entries) {
    if (!e.reward) continue;
    if (config.tag_filter && !config.tag_filter->matches(e.tags)) continue;
    double sim = cosine(query, e.embedding);
    if (sim < config.threshold) continue;
    rows.push_back({*e.reward, sim, e.id});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.reward != b.reward) return a.reward > b.reward;
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.id > b.id;
  });
  std::vector<std::int64_t> ids;
  for (const auto& r : rows) {
    if (static_cast<int>(ids.size()) >= config.k) break;
    ids.push_back(r.id);
  }
  return ids;
}

std::string random_sentence(SplitMix64& rng) {
  static const char* kWords[] = {"wolf", "vote",  "seer",   "claim", "guard",
                                 "night", "trust", "bluff", "seat",  "exile",
                                 "panic", "round", "badge", "check", "silence"};
  int n = 3 + static_cast<int>(rng.below(9));
  std::string sentence;
  for (int i = 0; i < n; ++i) {
    if (i) sentence += " ";
    sentence += kWords[rng.below(std::size(kWords))];
  }
  return sentence;
}

}  // namespace

TEST_CASE("hashed bag embedder: order-free, unit norm, zero on empty") {
  HashedBagEmbedder embedder;
  auto a = embedder.embed("wolf wolf vote");
  auto b = embedder.embed("vote wolf wolf");
  CHECK(a == b);
  CHECK(std::abs(a.norm() - 1.0) < 1e-6);
  CHECK(embedder.embed("").norm() == 0.0);
  CHECK(embedder.embed("...!!!").norm() == 0.0);
  // case-insensitive, splits on every non-alphanumeric
  CHECK(embedder.embed("Wolf,VOTE;wolf") == a);
  CHECK(embedder.embed("wolfvote") != a);
}

TEST_CASE("cosine: identity, orthogonality, zero vectors, dimension mismatch") {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(4);
  u[0] = 2.0;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
  v[1] = 3.0;
  CHECK(cosine(u, u) == doctest::Approx(1.0));
  CHECK(cosine(u, v) == doctest::Approx(0.0));
  CHECK(cosine(Eigen::VectorXd::Zero(4), u) == 0.0);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(5);
  CHECK_THROWS_AS(cosine(u, w), EngineError);
}

TEST_CASE("rewards follow the win/loss law: 1000-T for winners, T for losers") {
  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  pool.add("winner summary", tags_for(0, "g1"));
  pool.add("loser summary", tags_for(5, "g1"));
  CHECK_THROWS_AS(pool.finalize_rewards({"unknown", Camp::Good, 6}, {0}), EngineError);
  pool.finalize_rewards({"g1", Camp::Good, 6}, {0, 1, 2});
  auto entries = pool.snapshot();
  CHECK(entries[0].reward == 994.0);  // won in 6 rounds
  CHECK(entries[1].reward == 6.0);
  CHECK_THROWS_AS(pool.finalize_rewards({"g1", Camp::Good, 6}, {0}), EngineError);

  pool.add("quick win", tags_for(0, "g2"));
  pool.add("quick loss", tags_for(5, "g2"));
  pool.finalize_rewards({"g2", Camp::Good, 1}, {0});
  entries = pool.snapshot();
  CHECK(entries[2].reward == 999.0);
  CHECK(entries[3].reward == 1.0);

  CHECK_THROWS_AS(pool.add("", tags_for(0, "g3")), EngineError);
}

TEST_CASE("threshold gates candidates before reward ranks them") {
  // similarities [high, mid, low] with rewards [994, 6, 994]: the low-sim
  // 994 entry is excluded, the rest come back in reward order.
  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  pool.add("wolf vote night seer", tags_for(0, "g1"));         // close to query
  pool.add("wolf vote night guard check", tags_for(5, "g1"));  // still close
  pool.add("orchard apples harvest rain", tags_for(1, "g2"));  // unrelated
  pool.finalize_rewards({"g1", Camp::Good, 6}, {0});   // 994 and 6
  pool.finalize_rewards({"g2", Camp::Good, 6}, {1});   // 994, but dissimilar

  RetrievalConfig config;
  config.k = 2;
  config.threshold = 0.5;
  auto result = pool.retrieve("wolf vote night seer check", config);
  REQUIRE(result.size() == 2);
  CHECK(result[0].reward == 994.0);
  CHECK(result[0].tags.player_seat == 0);
  CHECK(result[1].reward == 6.0);
}

TEST_CASE("empty pool and pending rewards yield nothing") {
  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  RetrievalConfig config;
  CHECK(pool.retrieve("anything", config).empty());
  pool.add("wolf vote night", tags_for(0, "g1"));
  CHECK(pool.retrieve("wolf vote night", config).empty());  // pending: invisible
  pool.finalize_rewards({"g1", Camp::Good, 3}, {0});
  CHECK(pool.retrieve("wolf vote night", config).size() == 1);
}

TEST_CASE("retrieval equals the exhaustive-scan oracle on random pools") {
  SplitMix64 rng(20240601);
  HashedBagEmbedder embedder;
  for (int pool_size : {100, 1000}) {
    ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
    int game = 0;
    for (int i = 0; i < pool_size; i += 2) {
      std::string id = "g" + std::to_string(game++);
      pool.add(random_sentence(rng), tags_for(static_cast<int>(rng.below(12)), id, 1,
                                              rng.below(2) ? Role::Villager : Role::Seer));
      pool.add(random_sentence(rng), tags_for(static_cast<int>(rng.below(12)), id));
      pool.finalize_rewards({id, Camp::Good, static_cast<int>(1 + rng.below(12))},
                            {0, 1, 2, 3, 4, 5});
    }
    auto entries = pool.snapshot();
    for (int q = 0; q < 200; ++q) {
      RetrievalConfig config;
      config.k = 1 + static_cast<int>(rng.below(5));
      config.threshold = 0.5;
      if (rng.below(4) == 0) {
        TagFilter filter;
        filter.role = Role::Seer;
        config.tag_filter = filter;
      }
      std::string query = random_sentence(rng);
      auto got = pool.retrieve(query, config);
      auto expected = oracle_retrieve(entries, embedder.embed(query), config);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].id == expected[i]);
    }
  }
}

TEST_CASE("pool files round-trip and merge with fresh ids") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wolfarena_pool_test";
  fs::create_directories(dir);
  std::string path_a = (dir / "a.jsonl").string();
  std::string path_b = (dir / "b.jsonl").string();

  ExperiencePool pool(std::make_shared<HashedBagEmbedder>());
  pool.add("wolf vote night alpha", tags_for(0, "g1", 2, Role::Seer));
  pool.add("guard check bluff beta", tags_for(3, "g1", 3));
  pool.finalize_rewards({"g1", Camp::Good, 4}, {0});
  pool.save(path_a);

  ExperiencePool loaded(std::make_shared<HashedBagEmbedder>());
  loaded.load(path_a);
  REQUIRE(loaded.size() == 2);
  auto original = pool.snapshot();
  auto restored = loaded.snapshot();
  for (std::size_t i = 0; i < original.size(); ++i) {
    CHECK(original[i].summary == restored[i].summary);
    CHECK(original[i].reward == restored[i].reward);
    CHECK(original[i].embedding == restored[i].embedding);  // exact round trip
    CHECK(original[i].tags.game_id == restored[i].tags.game_id);
  }

  loaded.export_to(path_b, TagFilter{});
  std::size_t added = loaded.import_from(path_b);
  CHECK(added == 2);
  CHECK(loaded.size() == 4);
  auto merged = loaded.snapshot();
  CHECK(merged[2].id > merged[1].id);  // fresh ids, recency preserved
  CHECK(merged[2].reward == merged[0].reward);

  TagFilter seer_only;
  seer_only.role = Role::Seer;
  CHECK(loaded.export_to((dir / "c.jsonl").string(), seer_only) == 2);

  ExperiencePool broken(std::make_shared<HashedBagEmbedder>());
  CHECK_THROWS_AS(broken.load((dir / "missing.jsonl").string()), EngineError);
  fs::remove_all(dir);
}

TEST_CASE("summaries come from the provider and reject empty history") {
  MockProvider provider({}, "a compact summary");
  std::vector<std::string> transcript = {"line one", "line two"};
  CHECK(summarize(transcript, provider) == "a compact summary");
  CHECK_THROWS_AS(summarize({}, provider), EngineError);
  CHECK_THROWS_AS(local_summary({}), EngineError);
  CHECK(local_summary(transcript) == "line one | line two");
}

TEST_SUITE_END();
