#include <doctest.h>

#include "test_support.hpp"
#include "wolfarena/agents/grammar.hpp"
#include "wolfarena/agents/mock_reply.hpp"
#include "wolfarena/agents/prompts.hpp"

using namespace wolfarena;
using namespace wolfarena::testing;

TEST_SUITE_BEGIN("agents");

namespace {

ActionRequest make_request(RequestKind kind, int seat, std::set<int> legal) {
  ActionRequest req;
  req.kind = kind;
  req.seat = seat;
  req.legal_targets = std::move(legal);
  return req;
}

// A mid-game state with every private channel populated: runs a 12-player
// game until the witch decision of night one.
struct WitchMoment {
  Game game;
  ActionRequest witch_request;
  WitchMoment() : game(GameConfig::standard(12, false, 2024)) {
    step(game, [](const ActionRequest& req, const Game&) { return minimal_response(req); });
    auto reqs = game.pending_requests();
    REQUIRE(reqs.size() == 1);
    REQUIRE(reqs[0].kind == RequestKind::WitchDecision);
    witch_request = reqs[0];
  }
};

}  // namespace

TEST_CASE("contexts expose exactly the viewer's private channels") {
  WitchMoment m;
  const GameState& state = m.game.state();
  int witch = *state.seat_of(Role::Witch);
  int seer = -1;
  std::vector<int> wolves;
  for (int s = 0; s < 12; ++s) {
    if (state.role(s) == Role::Seer) seer = s;
    if (state.role(s) == Role::Werewolf) wolves.push_back(s);
  }

  for (int seat = 0; seat < 12; ++seat) {
    if (!state.is_alive(seat)) continue;
    ActionRequest probe = seat == witch
                              ? m.witch_request
                              : make_request(RequestKind::Speech, seat, {});
    AgentContext ctx = build_context(state, seat, m.game.events(), probe);

    if (state.role(seat) == Role::Werewolf) {
      CHECK(ctx.wolf_teammates.size() == wolves.size() - 1);
    } else {
      CHECK(ctx.wolf_teammates.empty());
    }
    if (seat == seer) {
      CHECK(ctx.seer_results.size() == 1);
    } else {
      CHECK(ctx.seer_results.empty());
    }
    if (seat == witch) {
      CHECK(ctx.witch_victim == m.witch_request.victim);
    } else {
      CHECK_FALSE(ctx.witch_victim.has_value());
    }

    // Rendered transcripts: check results and proposals stay private.
    std::string joined;
    for (const auto& line : ctx.transcript) joined += line + "\n";
    if (seat != seer) CHECK(joined.find("check result") == std::string::npos);
    if (state.role(seat) != Role::Werewolf)
      CHECK(joined.find("proposes to kill") == std::string::npos);
    std::string prompt = render_prompt(ctx, PromptSet::builtin());
    if (seat != witch)
      CHECK(prompt.find("Tonight's victim") == std::string::npos);
    if (state.role(seat) != Role::Werewolf)
      CHECK(prompt.find("werewolf teammates") == std::string::npos);
  }
}

TEST_CASE("context construction validates the seat") {
  WitchMoment m;
  ActionRequest probe = make_request(RequestKind::Speech, 0, {});
  CHECK_THROWS_AS(build_context(m.game.state(), 99, m.game.events(), probe), EngineError);
}

TEST_CASE("ballot grammar accepts legal votes and names illegal ones") {
  auto req = make_request(RequestKind::OfficialBallot, 4, {1, 2, 3, 5});
  auto ok = parse_response("VOTE: 3", req);
  REQUIRE(parse_ok(ok));
  CHECK(std::get<AgentResponse>(ok).target == 3);

  auto dead = parse_response("VOTE: 9", req);
  REQUIRE_FALSE(parse_ok(dead));
  CHECK(std::get<ParseError>(dead).reason.find("illegal target 9") != std::string::npos);

  auto abstain = parse_response("I will sit this out.\nVOTE: ABSTAIN", req);
  REQUIRE(parse_ok(abstain));
  CHECK_FALSE(std::get<AgentResponse>(abstain).target.has_value());

  auto prose = parse_response("Thinking about it...\nvote: 5 because reasons", req);
  REQUIRE(parse_ok(prose));
  CHECK(std::get<AgentResponse>(prose).target == 5);

  CHECK_FALSE(parse_ok(parse_response("no keyword here", req)));
}

TEST_CASE("inference grammar reads seatN=camp tokens") {
  auto req = make_request(RequestKind::InferenceRequest, 0, {2, 4});
  auto ok = parse_response("I think seat2=werewolf, seat4=good", req);
  REQUIRE(parse_ok(ok));
  auto claims = std::get<AgentResponse>(ok).claims;
  CHECK(claims == std::map<int, Camp>{{2, Camp::Wolf}, {4, Camp::Good}});

  auto missing = parse_response("seat2=werewolf", req);
  REQUIRE_FALSE(parse_ok(missing));
  CHECK(std::get<ParseError>(missing).reason.find("seat 4") != std::string::npos);

  auto illegal = parse_response("seat2=werewolf seat4=good seat7=good", req);
  CHECK_FALSE(parse_ok(illegal));
}

TEST_CASE("witch and hunter grammar respect availability") {
  auto witch = make_request(RequestKind::WitchDecision, 6, {0, 1, 2});
  witch.can_heal = true;
  witch.can_poison = true;
  auto heal = parse_response("HEAL: YES\nPOISON: NONE", witch);
  REQUIRE(parse_ok(heal));
  CHECK(std::get<AgentResponse>(heal).heal);

  auto both = parse_response("HEAL: YES\nPOISON: 2", witch);
  CHECK_FALSE(parse_ok(both));

  witch.can_heal = false;
  CHECK_FALSE(parse_ok(parse_response("HEAL: YES\nPOISON: NONE", witch)));

  auto hunter = make_request(RequestKind::HunterShot, 3, {0, 5});
  auto shot = parse_response("SHOOT: 5", hunter);
  REQUIRE(parse_ok(shot));
  CHECK(std::get<AgentResponse>(shot).target == 5);
  auto hold = parse_response("SHOOT: NONE", hunter);
  REQUIRE(parse_ok(hold));
  CHECK_FALSE(std::get<AgentResponse>(hold).target.has_value());
}

TEST_CASE("render then parse is the identity on well-formed responses") {
  SplitMix64 rng(4242);
  std::vector<RequestKind> kinds = {
      RequestKind::WolfProposal,    RequestKind::GuardTarget,
      RequestKind::SeerTarget,      RequestKind::WitchDecision,
      RequestKind::HunterShot,      RequestKind::ElectionBallot,
      RequestKind::PseudoBallot,    RequestKind::OfficialBallot,
      RequestKind::TiebreakBallot,  RequestKind::Speech,
      RequestKind::SheriffSummaryRequest, RequestKind::InferenceRequest,
      RequestKind::SpeakingOrderChoice};
  for (int iteration = 0; iteration < 500; ++iteration) {
    RequestKind kind = kinds[rng.below(kinds.size())];
    std::set<int> legal;
    int n = 2 + static_cast<int>(rng.below(6));
    while (static_cast<int>(legal.size()) < n) legal.insert(static_cast<int>(rng.below(12)));
    ActionRequest req = make_request(kind, static_cast<int>(rng.below(12)), legal);
    req.can_heal = true;
    req.can_poison = true;

    AgentResponse r;
    r.kind = kind;
    r.seat = req.seat;
    auto pick = [&] {
      auto it = legal.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(rng.below(legal.size())));
      return *it;
    };
    switch (kind) {
      case RequestKind::WolfProposal:
      case RequestKind::GuardTarget:
      case RequestKind::SeerTarget:
        r.target = pick();
        break;
      case RequestKind::WitchDecision:
        if (rng.below(3) == 0)
          r.heal = true;
        else if (rng.below(2) == 0)
          r.poison = pick();
        break;
      case RequestKind::HunterShot:
        if (rng.below(2) == 0) r.target = pick();
        break;
      case RequestKind::ElectionBallot:
      case RequestKind::PseudoBallot:
      case RequestKind::OfficialBallot:
      case RequestKind::TiebreakBallot:
        if (rng.below(4) != 0) r.target = pick();
        break;
      case RequestKind::Speech:
        r.text = "statement number " + std::to_string(rng.below(1000));
        break;
      case RequestKind::SheriffSummaryRequest:
        r.recommended = pick();
        r.text = "summary line " + std::to_string(rng.below(1000));
        break;
      case RequestKind::InferenceRequest:
        for (int t : legal) r.claims.emplace(t, rng.below(2) ? Camp::Wolf : Camp::Good);
        break;
      case RequestKind::SpeakingOrderChoice:
        r.start = pick();
        r.ascending = rng.below(2) == 0;
        break;
    }
    auto parsed = parse_response(render_response(r), req);
    REQUIRE_MESSAGE(parse_ok(parsed), "kind " << request_kind_name(kind) << ": "
                                              << std::get<ParseError>(parsed).reason);
    CHECK(std::get<AgentResponse>(parsed) == r);
  }
}

TEST_CASE("fallbacks are legal and marked") {
  auto ballot = make_request(RequestKind::OfficialBallot, 1, {2, 3});
  auto fb = deterministic_fallback(ballot);
  CHECK(fb.via_fallback);
  CHECK_FALSE(fb.target.has_value());  // abstain

  auto seer = make_request(RequestKind::SeerTarget, 1, {4, 6});
  CHECK(deterministic_fallback(seer).target == 4);  // lowest legal

  auto infer = make_request(RequestKind::InferenceRequest, 1, {0, 2});
  auto claims = deterministic_fallback(infer).claims;
  CHECK(claims == std::map<int, Camp>{{0, Camp::Good}, {2, Camp::Good}});
}

TEST_CASE("baselines are pure functions of request, context, and seed") {
  WitchMoment m;
  const GameState& state = m.game.state();
  int some_alive = *state.alive.begin();
  auto req = make_request(RequestKind::OfficialBallot, some_alive, state.alive);
  AgentContext ctx = build_context(state, some_alive, m.game.events(), req);

  auto a = baseline_policy(BaselineKind::Random, req, ctx, 7);
  auto b = baseline_policy(BaselineKind::Random, req, ctx, 7);
  CHECK(a == b);
  bool differs = false;
  for (std::uint64_t seed = 0; seed < 32 && !differs; ++seed)
    differs = !(baseline_policy(BaselineKind::Random, req, ctx, seed) == a);
  CHECK(differs);
}

TEST_CASE("heuristic rules: seer checks lowest unchecked, wolves hit lowest non-wolf") {
  WitchMoment m;
  const GameState& state = m.game.state();
  int seer = *state.seat_of(Role::Seer);

  auto req = make_request(RequestKind::SeerTarget, seer, minus(state.alive, seer));
  AgentContext ctx = build_context(state, seer, m.game.events(), req);
  REQUIRE(ctx.seer_results.size() == 1);
  int checked = ctx.seer_results[0].target;
  auto response = baseline_policy(BaselineKind::Heuristic, req, ctx, 0);
  std::set<int> unchecked = req.legal_targets;
  unchecked.erase(checked);
  CHECK(response.target == *unchecked.begin());

  int wolf = *state.alive_wolves().begin();
  auto wolf_req = make_request(RequestKind::WolfProposal, wolf, minus(state.alive, wolf));
  AgentContext wolf_ctx = build_context(state, wolf, m.game.events(), wolf_req);
  auto proposal = baseline_policy(BaselineKind::Heuristic, wolf_req, wolf_ctx, 0);
  REQUIRE(proposal.target.has_value());
  CHECK(state.role(*proposal.target) != Role::Werewolf);
  for (int t : wolf_req.legal_targets) {
    if (state.role(t) != Role::Werewolf) {
      CHECK(*proposal.target == t);
      break;
    }
  }
}

TEST_CASE("heuristic ballots follow the agent's own inference") {
  WitchMoment m;
  const GameState& state = m.game.state();
  int seer = *state.seat_of(Role::Seer);
  auto req = make_request(RequestKind::OfficialBallot, seer, state.alive);
  AgentContext ctx = build_context(state, seer, m.game.events(), req);
  auto response = baseline_policy(BaselineKind::Heuristic, req, ctx, 0);
  bool saw_wolf = false;
  for (const auto& obs : ctx.seer_results) saw_wolf |= obs.is_werewolf;
  if (saw_wolf) {
    REQUIRE(response.target.has_value());
    CHECK(state.role(*response.target) == Role::Werewolf);
  } else {
    CHECK_FALSE(response.target.has_value());  // nobody confirmed: abstain
  }
}

TEST_CASE("scripted mock replies parse for every request kind") {
  // Drive a full sheriff game where every decision flows through prompt
  // rendering, the mock replier, and the grammar; any illegal reply would
  // fail the parse and the strict submit.
  Game game(GameConfig::standard(8, true, 555));
  PromptSet prompts = PromptSet::builtin();
  int parse_failures = 0;
  Responder responder = [&](const ActionRequest& req, const Game& g) {
    AgentContext ctx = build_context(g.state(), req.seat, g.events(), req);
    std::string reply = scripted_mock_reply(render_prompt(ctx, prompts));
    auto outcome = parse_response(reply, req);
    if (!parse_ok(outcome)) {
      ++parse_failures;
      return deterministic_fallback(req);
    }
    return std::get<AgentResponse>(outcome);
  };
  drive_until(game, responder, [](const Game&) { return false; }, 5000);
  CHECK(game.finished());
  CHECK(parse_failures == 0);
}

TEST_SUITE_END();
