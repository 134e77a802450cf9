#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "wolfarena/engine/rng.hpp"

using namespace wolfarena;
using namespace wolfarena::testing;

TEST_SUITE_BEGIN("engine");

namespace {

int count_role(const std::vector<Role>& roles, Role r) {
  return static_cast<int>(std::count(roles.begin(), roles.end(), r));
}

}  // namespace

TEST_CASE("standard boards deal the documented compositions") {
  Game g8(GameConfig::standard(8, false, 1));
  CHECK(count_role(g8.state().roles, Role::Werewolf) == 2);
  CHECK(count_role(g8.state().roles, Role::Villager) == 4);
  CHECK(count_role(g8.state().roles, Role::Seer) == 1);
  CHECK(count_role(g8.state().roles, Role::Guard) == 1);
  CHECK(g8.state().alive.size() == 8);
  CHECK(g8.events().size() == 8);  // one role_assigned per seat

  Game g12(GameConfig::standard(12, false, 2));
  CHECK(count_role(g12.state().roles, Role::Werewolf) == 4);
  CHECK(count_role(g12.state().roles, Role::Villager) == 4);
  CHECK(count_role(g12.state().roles, Role::Seer) == 1);
  CHECK(count_role(g12.state().roles, Role::Witch) == 1);
  CHECK(count_role(g12.state().roles, Role::Hunter) == 1);
  CHECK(count_role(g12.state().roles, Role::Guard) == 1);
}

TEST_CASE("roster size must match the player count") {
  GameConfig bad = GameConfig::standard(8, false, 0);
  bad.roster.pop_back();  // 7 roles for 8 players
  CHECK_THROWS_AS(Game{bad}, EngineError);
  GameConfig small = GameConfig::standard(8, false, 0);
  small.n_players = 7;
  CHECK_THROWS_AS(Game{small}, EngineError);
}

TEST_CASE("identical seeds deal identical roles, different seeds differ") {
  Game a(GameConfig::standard(12, false, 99));
  Game b(GameConfig::standard(12, false, 99));
  CHECK(a.state().roles == b.state().roles);
  bool any_difference = false;
  for (std::uint64_t seed = 0; seed < 16 && !any_difference; ++seed) {
    Game c(GameConfig::standard(12, false, seed));
    any_difference = c.state().roles != a.state().roles;
  }
  CHECK(any_difference);
}

TEST_CASE("night one awaits wolves, guard, and seer; the witch is deferred") {
  Game g(GameConfig::standard(12, false, 7));
  auto reqs = g.pending_requests();
  int wolves = 0, guards = 0, seers = 0, witches = 0;
  for (const auto& r : reqs) {
    if (r.kind == RequestKind::WolfProposal) ++wolves;
    if (r.kind == RequestKind::GuardTarget) ++guards;
    if (r.kind == RequestKind::SeerTarget) ++seers;
    if (r.kind == RequestKind::WitchDecision) ++witches;
  }
  CHECK(wolves == 4);
  CHECK(guards == 1);
  CHECK(seers == 1);
  CHECK(witches == 0);
  CHECK(reqs.size() == 6);

  // After the main batch the witch is briefed on the victim.
  step(g, [](const ActionRequest& req, const Game&) { return minimal_response(req); });
  auto witch_reqs = g.pending_requests();
  REQUIRE(witch_reqs.size() == 1);
  CHECK(witch_reqs[0].kind == RequestKind::WitchDecision);
  CHECK(witch_reqs[0].victim.has_value());
  CHECK(witch_reqs[0].can_heal);
  CHECK(witch_reqs[0].can_poison);
}

TEST_CASE("legal guard targets exclude last night's target only") {
  GameState state;
  state.config = GameConfig::standard(8, false, 0);
  state.roles = {Role::Guard,    Role::Werewolf, Role::Villager, Role::Villager,
                 Role::Villager, Role::Seer,     Role::Villager, Role::Werewolf};
  state.phase = Phase::Night;

  SUBCASE("previous target excluded, self allowed") {
    state.alive = {0, 1, 2, 3, 4};
    state.last_guard_target = 2;
    CHECK(legal_guard_targets(state) == std::set<int>{0, 1, 3, 4});
  }
  SUBCASE("night one has no restriction") {
    state.alive = {0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(legal_guard_targets(state) == std::set<int>{0, 1, 2, 3, 4, 5, 6, 7});
  }
  SUBCASE("dead previous target makes the constraint vacuous") {
    state.alive = {0, 1, 3, 4};
    state.last_guard_target = 2;
    CHECK(legal_guard_targets(state) == std::set<int>{0, 1, 3, 4});
  }
  SUBCASE("dead guard is an error") {
    state.alive = {1, 2, 3};
    CHECK_THROWS_AS(legal_guard_targets(state), EngineError);
  }
}

TEST_CASE("wolf consensus: majority, then lowest-seat wolf among modal picks") {
  CHECK(resolve_wolf_target({{1, 5}, {2, 5}, {3, 7}}, {1, 2, 3}) == 5);
  CHECK(resolve_wolf_target({{1, 5}, {4, 7}}, {1, 4}) == 5);
  CHECK(resolve_wolf_target({{4, 7}, {6, 5}}, {4, 6}) == 7);
  CHECK(resolve_wolf_target({{2, 3}}, {2}) == 3);
  CHECK_THROWS_AS(resolve_wolf_target({}, {}), EngineError);
}

TEST_CASE("night resolution follows guard, kill, seer, witch") {
  GameState state;
  state.config = GameConfig::standard(8, false, 0);
  state.roles = {Role::Werewolf, Role::Werewolf, Role::Villager, Role::Villager,
                 Role::Villager, Role::Seer,     Role::Guard,    Role::Witch};
  state.alive = {0, 1, 2, 3, 4, 5, 6, 7};

  SUBCASE("guard blocks the kill") {
    NightActions acts;
    acts.wolf_proposals = {{0, 3}, {1, 3}};
    acts.guard_target = 3;
    auto out = resolve_night(state, acts);
    CHECK(out.deaths.empty());
    CHECK(out.victim_survived);
  }
  SUBCASE("unblocked kill plus poison") {
    NightActions acts;
    acts.wolf_proposals = {{0, 3}, {1, 3}};
    acts.guard_target = 5;
    acts.witch_poison_target = 1;
    auto out = resolve_night(state, acts);
    REQUIRE(out.deaths.size() == 2);
    CHECK(out.deaths[0] == std::pair<int, DeathCause>{3, DeathCause::WolfKill});
    CHECK(out.deaths[1] == std::pair<int, DeathCause>{1, DeathCause::Poison});
  }
  SUBCASE("guard plus heal kills under the die variant") {
    state.config.guard_save_interaction = GuardSaveInteraction::Die;
    NightActions acts;
    acts.wolf_proposals = {{0, 3}, {1, 3}};
    acts.guard_target = 3;
    acts.witch_heal = true;
    auto out = resolve_night(state, acts);
    REQUIRE(out.deaths.size() == 1);
    CHECK(out.deaths[0] == std::pair<int, DeathCause>{3, DeathCause::WolfKill});
  }
  SUBCASE("guard plus heal saves under the default variant") {
    NightActions acts;
    acts.wolf_proposals = {{0, 3}, {1, 3}};
    acts.guard_target = 3;
    acts.witch_heal = true;
    CHECK(resolve_night(state, acts).deaths.empty());
  }
  SUBCASE("seer verdict reports werewolves") {
    NightActions acts;
    acts.wolf_proposals = {{0, 3}, {1, 3}};
    acts.seer_target = 1;
    auto out = resolve_night(state, acts);
    REQUIRE(out.seer_verdict.has_value());
    CHECK(out.seer_verdict->first == 1);
    CHECK(out.seer_verdict->second);
  }
  SUBCASE("guard repeat and potion reuse are rejected") {
    NightActions acts;
    acts.wolf_proposals = {{0, 3}};
    acts.guard_target = 4;
    state.last_guard_target = 4;
    CHECK_THROWS_AS(resolve_night(state, acts), EngineError);
    state.last_guard_target.reset();
    acts.witch_heal = true;
    state.witch_heal_available = false;
    CHECK_THROWS_AS(resolve_night(state, acts), EngineError);
    state.witch_heal_available = true;
    acts.witch_poison_target = 2;
    CHECK_THROWS_AS(resolve_night(state, acts), EngineError);  // both potions
  }
}

TEST_CASE("weighted tally: sheriff counts 1.5, ties and abstains resolve") {
  SUBCASE("weighted sums decide") {
    VoteRound round;
    round.kind = VoteKind::Official;
    round.ballots = {{1, 7}, {2, 7}, {3, 1}, {4, 1}, {5, 1}};
    round.weights = {{1, 1.5}, {2, 1.0}, {3, 1.0}, {4, 1.0}, {5, 1.0}};
    auto tally = tally_votes(round);
    CHECK(tally.is_winner());
    CHECK(tally.winner == 1);
    CHECK(tally.totals.at(7) == 2.5);
    CHECK(tally.totals.at(1) == 3.0);
  }
  SUBCASE("two equal maxima tie") {
    VoteRound round;
    round.ballots = {{0, 5}, {1, 5}, {2, 6}, {3, 6}};
    auto tally = tally_votes(round);
    CHECK(tally.is_tied());
    CHECK(tally.tied == std::set<int>{5, 6});
  }
  SUBCASE("all abstain exiles nobody") {
    VoteRound round;
    round.ballots = {{0, std::nullopt}, {1, std::nullopt}};
    CHECK(tally_votes(round).no_exile());
  }
}

TEST_CASE("win check: good at zero wolves, wolves on strict majority") {
  GameState state;
  state.config = GameConfig::standard(8, false, 0);
  state.roles = {Role::Werewolf, Role::Werewolf, Role::Villager, Role::Villager,
                 Role::Villager, Role::Seer,     Role::Guard,    Role::Villager};

  state.alive = {2, 3, 4};  // no wolves
  CHECK(check_win(state) == Camp::Good);

  state.alive = {0, 1, 2};  // 2 wolves vs 1
  CHECK(check_win(state) == Camp::Wolf);

  state.alive = {0, 1, 2, 3};  // 2 vs 2: strict rule keeps playing
  CHECK(check_win(state) == std::nullopt);

  state.config.wolf_win_on_equal = true;
  CHECK(check_win(state) == Camp::Wolf);
}

TEST_CASE("submit order does not matter; the event stream is byte-identical") {
  GameConfig config = GameConfig::standard(12, false, 31);
  Game a(config), b(config);
  auto reqs = a.pending_requests();
  std::vector<AgentResponse> responses;
  for (const auto& r : reqs) responses.push_back(minimal_response(r));
  auto forward = a.submit(responses);
  std::reverse(responses.begin(), responses.end());
  auto reversed = b.submit(responses);
  REQUIRE(forward.size() == reversed.size());
  for (std::size_t i = 0; i < forward.size(); ++i)
    CHECK(event_to_json(forward[i]) == event_to_json(reversed[i]));
}

TEST_CASE("missing and illegal responses are rejected with specifics") {
  Game g(GameConfig::standard(12, false, 5));
  auto reqs = g.pending_requests();

  SUBCASE("missing response names the unserved request") {
    std::vector<AgentResponse> responses;
    for (std::size_t i = 0; i + 1 < reqs.size(); ++i)
      responses.push_back(minimal_response(reqs[i]));
    CHECK_THROWS_WITH_AS(g.submit(responses),
                         doctest::Contains("missing response"), EngineError);
  }
  SUBCASE("illegal target carries the legal set") {
    std::vector<AgentResponse> responses;
    for (const auto& r : reqs) responses.push_back(minimal_response(r));
    responses[0].target = 999;
    try {
      g.submit(responses);
      FAIL("expected rejection");
    } catch (const EngineError& e) {
      std::string message = e.what();
      CHECK(message.find("illegal target 999") != std::string::npos);
      CHECK(message.find("legal targets:") != std::string::npos);
    }
  }
  SUBCASE("a missing witch response is named") {
    step(g, [](const ActionRequest& req, const Game&) { return minimal_response(req); });
    REQUIRE(g.pending_requests().size() == 1);
    CHECK_THROWS_WITH_AS(g.submit({}), doctest::Contains("witch_decision"), EngineError);
  }
}

TEST_CASE("sheriff election: plurality, one runoff, persistent tie to lowest seat") {
  // Keep all 8 alive through night one: wolves hit the lowest non-wolf seat
  // and the guard protects exactly that seat.
  auto night_safe = [](const ActionRequest& req, const Game& g) {
    AgentResponse r = minimal_response(req);
    if (req.kind == RequestKind::WolfProposal || req.kind == RequestKind::GuardTarget) {
      for (int s : g.state().alive) {
        if (g.state().role(s) != Role::Werewolf) {
          r.target = s;
          break;
        }
      }
    }
    return r;
  };

  auto run_election = [&](const std::map<int, std::vector<int>>& votes_by_stage,
                          std::uint64_t seed) {
    Game g(GameConfig::standard(8, true, seed));
    step(g, night_safe);
    REQUIRE(g.state().phase == Phase::Election);
    REQUIRE(g.state().alive.size() == 8);
    int stage = 0;
    while (g.state().phase == Phase::Election) {
      const auto& picks = votes_by_stage.at(stage);
      step(g, [&](const ActionRequest& req, const Game&) {
        AgentResponse r = minimal_response(req);
        r.target = picks[static_cast<std::size_t>(req.seat)];
        return r;
      });
      ++stage;
    }
    return g.state().sheriff;
  };

  SUBCASE("tie then runoff") {
    // counts 1:3, 2:3, 3:2 -> runoff over {1,2}; then 1:5 vs 2:3.
    auto sheriff = run_election(
        {{0, {1, 1, 1, 2, 2, 2, 3, 3}}, {1, {1, 1, 1, 1, 1, 2, 2, 2}}}, 77);
    CHECK(sheriff == 1);
  }
  SUBCASE("outright plurality") {
    auto sheriff = run_election({{0, {4, 4, 4, 4, 4, 1, 2, 3}}}, 78);
    CHECK(sheriff == 4);
  }
  SUBCASE("persistent tie falls to the lowest tied seat") {
    auto sheriff = run_election(
        {{0, {1, 1, 1, 1, 2, 2, 2, 2}}, {1, {1, 1, 1, 1, 2, 2, 2, 2}}}, 79);
    CHECK(sheriff == 1);
  }
}

TEST_CASE("runoff ballots are restricted to the tied seats") {
  Game g(GameConfig::standard(8, true, 123));
  step(g, [](const ActionRequest& req, const Game& gg) {
    AgentResponse r = minimal_response(req);
    if (req.kind == RequestKind::WolfProposal || req.kind == RequestKind::GuardTarget) {
      for (int s : gg.state().alive)
        if (gg.state().role(s) != Role::Werewolf) {
          r.target = s;
          break;
        }
    }
    return r;
  });
  REQUIRE(g.state().phase == Phase::Election);
  std::vector<int> picks = {1, 1, 1, 2, 2, 2, 3, 3};
  step(g, [&](const ActionRequest& req, const Game&) {
    AgentResponse r = minimal_response(req);
    r.target = picks[static_cast<std::size_t>(req.seat)];
    return r;
  });
  for (const auto& req : g.pending_requests()) {
    CHECK(req.kind == RequestKind::ElectionBallot);
    CHECK(req.legal_targets == std::set<int>{1, 2});
  }
}

TEST_CASE("hunter windows: exile shot fires, poison stays silent by default") {
  SUBCASE("exiled hunter shoots") {
    // 12-player game driven so the hunter is exiled: everyone official-votes
    // the hunter's seat.
    Game g(GameConfig::standard(12, false, 41));
    int hunter = -1;
    for (int s = 0; s < 12; ++s)
      if (g.state().role(s) == Role::Hunter) hunter = s;
    REQUIRE(hunter >= 0);
    bool window_seen = false;
    int shot_target = -1;
    Responder responder = [&](const ActionRequest& req, const Game& gg) {
      AgentResponse r = minimal_response(req);
      if (req.kind == RequestKind::WolfProposal) {
        // aim somewhere legal that is not the hunter so he survives nights
        for (int t : req.legal_targets)
          if (t != hunter) {
            r.target = t;
            break;
          }
      }
      if (is_ballot(req.kind) && gg.state().is_alive(hunter) &&
          req.legal_targets.count(hunter)) {
        r.target = hunter;
      }
      if (req.kind == RequestKind::HunterShot) {
        window_seen = true;
        r.target = *req.legal_targets.begin();
        shot_target = *r.target;
      }
      return r;
    };
    drive_until(g, responder, [&](const Game&) { return window_seen; }, 2000);
    REQUIRE(window_seen);
    bool death_logged = false;
    for (const auto& ev : g.events())
      if (ev.kind == EventKind::Death && ev.seat == shot_target &&
          ev.cause == DeathCause::HunterShot)
        death_logged = true;
    CHECK(death_logged);
    CHECK_FALSE(g.state().hunter_shot_available);
  }

  SUBCASE("poisoned hunter gets no window under default flags") {
    Game g(GameConfig::standard(12, false, 43));
    int hunter = -1;
    for (int s = 0; s < 12; ++s)
      if (g.state().role(s) == Role::Hunter) hunter = s;
    bool hunter_request_seen = false;
    Responder responder = [&](const ActionRequest& req, const Game& gg) {
      AgentResponse r = minimal_response(req);
      if (req.kind == RequestKind::WolfProposal) {
        for (int t : req.legal_targets)
          if (t != hunter) {
            r.target = t;
            break;
          }
      }
      if (req.kind == RequestKind::WitchDecision && req.can_poison &&
          gg.state().is_alive(hunter)) {
        r.poison = hunter;
      }
      if (req.kind == RequestKind::HunterShot) hunter_request_seen = true;
      return r;
    };
    drive_until(g, responder,
                [&](const Game& gg) { return !gg.state().is_alive(hunter); }, 2000);
    CHECK_FALSE(g.state().is_alive(hunter));
    // step once more through the dawn: no hunter window may appear
    CHECK_FALSE(hunter_request_seen);
    for (const auto& req : g.pending_requests())
      CHECK(req.kind != RequestKind::HunterShot);
  }

  SUBCASE("poisoned hunter shoots when the variant flag is on") {
    GameConfig config = GameConfig::standard(12, false, 43);
    config.hunter_shoots_when_poisoned = true;
    Game g(config);
    int hunter = -1;
    for (int s = 0; s < 12; ++s)
      if (g.state().role(s) == Role::Hunter) hunter = s;
    bool hunter_request_seen = false;
    Responder responder = [&](const ActionRequest& req, const Game& gg) {
      AgentResponse r = minimal_response(req);
      if (req.kind == RequestKind::WolfProposal) {
        for (int t : req.legal_targets)
          if (t != hunter) {
            r.target = t;
            break;
          }
      }
      if (req.kind == RequestKind::WitchDecision && req.can_poison &&
          gg.state().is_alive(hunter))
        r.poison = hunter;
      if (req.kind == RequestKind::HunterShot) hunter_request_seen = true;
      return r;
    };
    drive_until(g, responder, [&](const Game&) { return hunter_request_seen; }, 2000);
    CHECK(hunter_request_seen);
  }
}

TEST_CASE("declining the shot logs no death and closes the window") {
  Game g(GameConfig::standard(12, false, 41));
  int hunter = -1;
  for (int s = 0; s < 12; ++s)
    if (g.state().role(s) == Role::Hunter) hunter = s;
  bool window_seen = false;
  Responder responder = [&](const ActionRequest& req, const Game& gg) {
    AgentResponse r = minimal_response(req);
    if (req.kind == RequestKind::WolfProposal) {
      for (int t : req.legal_targets)
        if (t != hunter) {
          r.target = t;
          break;
        }
    }
    if (is_ballot(req.kind) && gg.state().is_alive(hunter) &&
        req.legal_targets.count(hunter))
      r.target = hunter;
    if (req.kind == RequestKind::HunterShot) window_seen = true;  // decline
    return r;
  };
  drive_until(g, responder, [&](const Game&) { return window_seen; }, 2000);
  REQUIRE(window_seen);
  int hunter_deaths = 0;
  for (const auto& ev : g.events())
    if (ev.kind == EventKind::Death && ev.cause == DeathCause::HunterShot) ++hunter_deaths;
  CHECK(hunter_deaths == 0);
  CHECK(g.state().hunter_shot_available);  // declining consumed nothing
  CHECK_FALSE(g.state().pending_hunter.has_value());
}

TEST_CASE("driven games satisfy the core invariants") {
  // Mixed boards, many seeds; every check the rules promise, on every event.
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    GameConfig config = GameConfig::standard(seed % 2 == 0 ? 8 : 12, seed % 3 == 0, seed);
    Game game(config);
    drive_random(game, mix_seed(seed, 17));
    REQUIRE(game.finished());

    const auto& events = game.events();
    std::set<int> dead;
    std::map<int, std::optional<int>> guard_by_round;
    std::set<int> alive_all;
    for (int s = 0; s < config.n_players; ++s) alive_all.insert(s);
    int heal_events = 0, poison_events = 0, shot_events = 0, game_overs = 0;
    std::optional<int> hunter_window_seat;

    for (const auto& ev : events) {
      // dead seats never act again, except the hunter's shot window
      switch (ev.kind) {
        case EventKind::NightAction:
        case EventKind::Speech:
        case EventKind::VoteCast:
        case EventKind::IdentityInference:
        case EventKind::SheriffSummary:
        case EventKind::SpeakingOrder:
          CHECK(dead.count(ev.seat) == 0);
          break;
        case EventKind::HunterShot:
          CHECK(hunter_window_seat == ev.seat);
          ++shot_events;
          break;
        default:
          break;
      }
      if (ev.kind == EventKind::NightAction) {
        if (ev.night_action == NightActionKind::Guard)
          guard_by_round[ev.round] = ev.target;
        if (ev.night_action == NightActionKind::WitchHeal) ++heal_events;
        if (ev.night_action == NightActionKind::WitchPoison) ++poison_events;
      }
      if (ev.kind == EventKind::Death) {
        dead.insert(ev.seat);
        if (game.state().roles[static_cast<std::size_t>(ev.seat)] == Role::Hunter &&
            ev.cause == DeathCause::WolfKill)
          hunter_window_seat = ev.seat;
      }
      if (ev.kind == EventKind::Exile) {
        if (game.state().roles[static_cast<std::size_t>(ev.seat)] == Role::Hunter)
          hunter_window_seat = ev.seat;
      }
      if (ev.kind == EventKind::GameOver) {
        ++game_overs;
        CHECK(ev.total_rounds == game.state().round);
      }
    }
    CHECK(game_overs == 1);
    CHECK(heal_events <= 1);
    CHECK(poison_events <= 1);
    CHECK(shot_events <= 1);

    // consecutive-night guard targets differ while the old one is legal
    for (const auto& [round, target] : guard_by_round) {
      auto prev = guard_by_round.find(round - 1);
      if (prev != guard_by_round.end() && prev->second && target)
        CHECK(*prev->second != *target);
    }
  }
}

TEST_CASE("official vote weights sum as promised and tallies recompute") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    GameConfig config = GameConfig::standard(8, true, seed);
    Game game(config);
    drive_random(game, seed);
    REQUIRE(game.finished());

    std::optional<int> sheriff;
    for (const auto& ev : game.events()) {
      if (ev.kind == EventKind::SheriffElected) sheriff = ev.seat;
      if (ev.kind == EventKind::Death && sheriff && *sheriff == ev.seat) sheriff.reset();
      if (ev.kind == EventKind::VoteCast && ev.vote == VoteKind::Official) {
        double expected = (sheriff && *sheriff == ev.seat) ? 1.5 : 1.0;
        CHECK(ev.weight == expected);
      }
    }
  }
}

TEST_CASE("pending request sets match the phase definitions during play") {
  for (std::uint64_t seed = 300; seed < 306; ++seed) {
    GameConfig config = GameConfig::standard(12, seed % 2 == 0, seed);
    Game game(config);
    std::uint64_t agent_seed = mix_seed(seed, 3);
    int steps = 0;
    while (!game.finished() && steps++ < 3000) {
      auto reqs = game.pending_requests();
      REQUIRE(!reqs.empty());
      const auto& state = game.state();
      if (state.pending_hunter) {
        CHECK(reqs.size() == 1);
        CHECK(reqs[0].kind == RequestKind::HunterShot);
      } else if (state.phase == Phase::OfficialVote) {
        CHECK(reqs.size() == state.alive.size());
        for (const auto& r : reqs) CHECK(r.kind == RequestKind::OfficialBallot);
      } else if (state.phase == Phase::Inference) {
        CHECK(reqs.size() == state.alive.size());
        for (const auto& r : reqs) {
          CHECK(r.kind == RequestKind::InferenceRequest);
          CHECK(r.legal_targets.count(r.seat) == 0);
        }
      } else if (state.phase == Phase::PseudoVote) {
        CHECK(reqs.size() == state.alive.size());
      }
      std::vector<AgentResponse> responses;
      for (const auto& req : reqs) {
        AgentContext ctx = build_context(state, req.seat, game.events(), req);
        responses.push_back(baseline_policy(BaselineKind::Random, req, ctx,
                                            mix_seed(agent_seed, req.seat)));
      }
      game.submit(responses);
    }
    REQUIRE(game.finished());
  }
}

TEST_SUITE_END();
