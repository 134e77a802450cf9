#include "wolfarena/metrics/scores.hpp"

#include <algorithm>
#include <set>

namespace wolfarena {

namespace {

std::optional<int> unique_seat_with_role(const GameLogView& log, Role r) {
  auto seats = log.seats_with_role(r);
  if (seats.empty()) return std::nullopt;
  return seats.front();
}

}  // namespace

std::optional<double> seer_score_for(const GameLogView& log, int seat) {
  if (log.role(seat) != Role::Seer) return std::nullopt;
  std::set<int> wolves_checked;
  for (const auto& [round, target] : log.seer_checks(seat))
    if (log.camp(target) == Camp::Wolf) wolves_checked.insert(target);
  int total = log.wolves_in_game();
  if (total == 0) return std::nullopt;
  return static_cast<double>(wolves_checked.size()) / total;
}

std::optional<double> witch_score_for(const GameLogView& log, int seat) {
  if (log.role(seat) != Role::Witch) return std::nullopt;
  auto heal = log.witch_heal_target(seat);
  auto poison = log.witch_poison_target(seat);
  int used = (heal ? 1 : 0) + (poison ? 1 : 0);
  if (used == 0) return std::nullopt;  // no potion used: no verdict
  int good = 0;
  if (heal && log.camp(*heal) == Camp::Good) ++good;
  if (poison && log.camp(*poison) == Camp::Wolf) ++good;
  return static_cast<double>(good) / used;
}

std::optional<double> hunter_score_for(const GameLogView& log, int seat) {
  if (log.role(seat) != Role::Hunter) return std::nullopt;
  auto shot = log.hunter_shot(seat);
  if (!shot) return std::nullopt;  // never fired
  return log.camp(shot->second) == Camp::Wolf ? 1.0 : 0.0;
}

std::optional<double> guard_score_for(const GameLogView& log, int seat,
                                      const MetricsOptions& opts) {
  if (log.role(seat) != Role::Guard) return std::nullopt;
  const auto& attempts = log.guard_attempts(seat);
  if (attempts.empty()) return std::nullopt;
  double sum = 0.0;
  for (const auto& a : attempts) {
    bool indicator = opts.guard_literal_elimination ? a.target_died_at_night
                                                    : a.prevented_kill;
    sum += opts.alpha_guard * (a.target_good ? 1.0 : 0.0) +
           (1.0 - opts.alpha_guard) * (indicator ? 1.0 : 0.0);
  }
  return sum / static_cast<double>(attempts.size());
}

double werewolf_score(const GameLogView& log, int wolf_seat, double alpha_wolf) {
  int total = std::max(log.total_rounds(), 1);
  auto death = log.death_of(wolf_seat);
  // The round a player dies in still counts as survived: they played it.
  int survived = death ? death->round : total;
  bool alive_at_end = !death.has_value();
  return alpha_wolf * (static_cast<double>(survived) / total) +
         (1.0 - alpha_wolf) * (alive_at_end ? 1.0 : 0.0);
}

std::optional<double> seer_score(const GameLogView& log) {
  auto seat = unique_seat_with_role(log, Role::Seer);
  if (!seat) return std::nullopt;
  return seer_score_for(log, *seat);
}

std::optional<double> witch_score(const GameLogView& log) {
  auto seat = unique_seat_with_role(log, Role::Witch);
  if (!seat) return std::nullopt;
  return witch_score_for(log, *seat);
}

std::optional<double> hunter_score(const GameLogView& log) {
  auto seat = unique_seat_with_role(log, Role::Hunter);
  if (!seat) return std::nullopt;
  return hunter_score_for(log, *seat);
}

std::optional<double> guard_score(const GameLogView& log, const MetricsOptions& opts) {
  auto seat = unique_seat_with_role(log, Role::Guard);
  if (!seat) return std::nullopt;
  return guard_score_for(log, *seat, opts);
}

std::optional<double> sheriff_influence(const std::vector<GameLogView>& logs,
                                        const std::string& sheriff_model,
                                        Camp sheriff_camp) {
  long numerator = 0;
  long denominator = 0;
  for (const auto& log : logs) {
    auto sheriff = log.sheriff_seat();
    if (!sheriff) continue;
    if (log.model_tag(*sheriff) != sheriff_model) continue;
    if (log.camp(*sheriff) != sheriff_camp) continue;

    // Pair each pseudo round with its recommendation and the official round
    // of the same day.
    for (const auto& pseudo : log.vote_rounds()) {
      if (pseudo.kind != VoteKind::Pseudo) continue;
      std::optional<int> recommended;
      for (const auto& s : log.summaries())
        if (s.round == pseudo.round) recommended = s.recommended;
      if (!recommended) continue;
      const VoteRoundRecord* official = nullptr;
      for (const auto& vr : log.vote_rounds())
        if (vr.kind == VoteKind::Official && vr.round == pseudo.round) official = &vr;
      if (!official) continue;

      for (const auto& [voter, ballot] : official->ballots) {
        if (voter == *sheriff) continue;
        ++denominator;
        auto pit = pseudo.ballots.find(voter);
        if (pit == pseudo.ballots.end()) continue;
        bool changed = ballot.target != pit->second.target;
        if (changed && ballot.target && *ballot.target == *recommended) ++numerator;
      }
    }
  }
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::optional<double> irp(const std::vector<GameLogView>& logs,
                          const std::string& model_tag) {
  long correct = 0;
  long total = 0;
  for (const auto& log : logs) {
    for (const auto& inf : log.inferences()) {
      if (log.model_tag(inf.seat) != model_tag) continue;
      for (const auto& [target, claimed] : inf.claims) {
        ++total;
        if (claimed == log.camp(target)) ++correct;
      }
    }
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(correct) / static_cast<double>(total);
}

std::optional<double> kre(const std::vector<GameLogView>& logs,
                          const std::string& model_tag, const MetricsOptions& opts) {
  int instances = 0;
  int survived = 0;
  std::vector<double> scores;
  for (const auto& log : logs) {
    for (int seat = 0; seat < log.n_players(); ++seat) {
      Role r = log.role(seat);
      if (!is_god(r)) continue;
      if (log.model_tag(seat) != model_tag) continue;
      ++instances;
      if (log.alive_at_end(seat)) ++survived;
      std::optional<double> score;
      switch (r) {
        case Role::Seer: score = seer_score_for(log, seat); break;
        case Role::Witch: score = witch_score_for(log, seat); break;
        case Role::Hunter: score = hunter_score_for(log, seat); break;
        case Role::Guard: score = guard_score_for(log, seat, opts); break;
        default: break;
      }
      if (score) scores.push_back(*score);
    }
  }
  if (instances == 0) return std::nullopt;
  double survival = static_cast<double>(survived) / instances;
  double skill = 0.0;
  if (!scores.empty()) {
    for (double s : scores) skill += s;
    skill /= static_cast<double>(scores.size());
  }
  return opts.alpha_kre * survival + (1.0 - opts.alpha_kre) * skill;
}

std::optional<double> vss(const std::vector<GameLogView>& logs,
                          const std::string& model_tag) {
  long hits = 0;
  long total = 0;
  for (const auto& log : logs) {
    for (const auto& vr : log.vote_rounds()) {
      if (vr.kind != VoteKind::Official && vr.kind != VoteKind::Tiebreak) continue;
      for (const auto& [voter, ballot] : vr.ballots) {
        if (log.camp(voter) != Camp::Good) continue;  // wolves know the roles
        if (log.model_tag(voter) != model_tag) continue;
        ++total;  // abstains count against the score
        if (ballot.target && log.camp(*ballot.target) == Camp::Wolf) ++hits;
      }
    }
  }
  if (total == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace wolfarena
