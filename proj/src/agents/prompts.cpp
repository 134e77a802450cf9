#include "wolfarena/agents/prompts.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace wolfarena {

namespace {

constexpr const char* kSystemText =
    "You are playing the social deduction game Werewolf. You sit at a table "
    "of 8 to 12 players. At night the werewolves kill, the guard protects, "
    "the seer checks, the witch may heal or poison. By day the town debates "
    "and votes to exile one player. The good camp wins when every werewolf "
    "is gone; the werewolves win when they outnumber the good camp. Stay in "
    "character, reason from the transcript you are given, and answer in "
    "exactly the format requested at the end of the prompt.";

const std::map<RequestKind, const char*> kInstructions = {
    {RequestKind::WolfProposal,
     "Night falls. As a werewolf, propose tonight's kill. Your pack sees "
     "your proposal; a majority decides, otherwise the lowest-seat wolf's "
     "modal pick wins.\nReply with one line: \"KILL: <seat>\"."},
    {RequestKind::GuardTarget,
     "Night falls. Choose one player to protect from the werewolves. You "
     "cannot guard the same player on consecutive nights.\nReply with one "
     "line: \"GUARD: <seat>\"."},
    {RequestKind::SeerTarget,
     "Night falls. Choose one player to check; you will learn whether they "
     "are a werewolf.\nReply with one line: \"CHECK: <seat>\"."},
    {RequestKind::WitchDecision,
     "Night falls. The werewolves' victim is named below. You may use your "
     "healing potion on the victim, or your poison on any player, or keep "
     "both. Each potion works once per game.\nReply with two lines: "
     "\"HEAL: YES\" or \"HEAL: NO\", then \"POISON: <seat>\" or "
     "\"POISON: NONE\"."},
    {RequestKind::HunterShot,
     "You have just died. As the hunter you may immediately shoot one "
     "player, or hold your fire.\nReply with one line: \"SHOOT: <seat>\" or "
     "\"SHOOT: NONE\"."},
    {RequestKind::ElectionBallot,
     "The town elects a sheriff. The sheriff speaks first, summarizes votes, "
     "and their ballot weighs 1.5.\nReply with one line: \"VOTE: <seat>\" or "
     "\"VOTE: ABSTAIN\"."},
    {RequestKind::Speech,
     "It is your turn to speak to the town. Make your case in a few "
     "sentences.\nReply with your speech text only."},
    {RequestKind::PseudoBallot,
     "A first, non-binding vote is taken so the sheriff can read the room. "
     "\nReply with one line: \"VOTE: <seat>\" or \"VOTE: ABSTAIN\"."},
    {RequestKind::SheriffSummaryRequest,
     "You are the sheriff. The first-round vote tallies are listed below. "
     "Summarize the vote and recommend one player to exile, then call the "
     "binding revote.\nReply with a line \"RECOMMEND: <seat>\" followed by "
     "your summary text."},
    {RequestKind::InferenceRequest,
     "Before the binding vote, infer the camp of every other living player."
     "\nReply with one line per player, e.g. \"seat3=werewolf\" or "
     "\"seat5=good\", covering every listed seat."},
    {RequestKind::OfficialBallot,
     "This is the binding exile vote. The most-voted player is exiled; the "
     "sheriff's ballot weighs 1.5.\nReply with one line: \"VOTE: <seat>\" or "
     "\"VOTE: ABSTAIN\"."},
    {RequestKind::TiebreakBallot,
     "The vote tied. After the debate, vote again; only the tied seats are "
     "valid targets. A second tie exiles nobody.\nReply with one line: "
     "\"VOTE: <seat>\" or \"VOTE: ABSTAIN\"."},
    {RequestKind::SpeakingOrderChoice,
     "As sheriff you set today's speaking order: pick the starting seat and "
     "the direction.\nReply with two lines: \"START: <seat>\" and "
     "\"DIRECTION: UP\" or \"DIRECTION: DOWN\"."},
};

std::string read_file_or(const std::filesystem::path& path, std::string fallback) {
  std::ifstream in(path);
  if (!in) return fallback;
  std::ostringstream oss;
  oss << in.rdbuf();
  std::string text = oss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text.empty() ? fallback : text;
}

}  // namespace

PromptSet PromptSet::builtin() {
  PromptSet set;
  set.system_ = kSystemText;
  for (const auto& [kind, text] : kInstructions) set.instructions_[kind] = text;
  return set;
}

PromptSet PromptSet::from_directory(const std::string& dir) {
  PromptSet set = builtin();
  std::filesystem::path base(dir);
  set.system_ = read_file_or(base / "system.txt", set.system_);
  for (auto& [kind, text] : set.instructions_)
    text = read_file_or(base / (std::string(request_kind_name(kind)) + ".txt"), text);
  return set;
}

const std::string& PromptSet::instruction_for(RequestKind kind) const {
  auto it = instructions_.find(kind);
  if (it == instructions_.end()) throw EngineError("no prompt template for request kind");
  return it->second;
}

const char* answer_kind_marker(RequestKind kind) {
  switch (kind) {
    case RequestKind::WolfProposal: return "KILL";
    case RequestKind::GuardTarget: return "GUARD";
    case RequestKind::SeerTarget: return "CHECK";
    case RequestKind::WitchDecision: return "WITCH";
    case RequestKind::HunterShot: return "SHOOT";
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot: return "VOTE";
    case RequestKind::Speech: return "SPEECH";
    case RequestKind::SheriffSummaryRequest: return "SUMMARY";
    case RequestKind::InferenceRequest: return "INFER";
    case RequestKind::SpeakingOrderChoice: return "ORDER";
  }
  return "?";
}

std::string render_prompt(const AgentContext& ctx, const PromptSet& prompts) {
  std::ostringstream oss;
  oss << "You are seat " << ctx.seat << ", role " << role_name(ctx.role) << " ("
      << camp_name(ctx.camp) << " camp). Round " << ctx.round << ".\n";
  oss << "Alive seats:";
  for (int s : ctx.alive) oss << " " << s;
  oss << ".\n";
  if (ctx.sheriff) oss << "The sheriff is seat " << *ctx.sheriff << ".\n";

  if (!ctx.wolf_teammates.empty()) {
    oss << "Your werewolf teammates:";
    for (int s : ctx.wolf_teammates) oss << " seat " << s;
    oss << ".\n";
  }
  if (!ctx.seer_results.empty()) {
    oss << "Your check results so far:\n";
    for (const auto& obs : ctx.seer_results)
      oss << "  night " << obs.round << ": seat " << obs.target
          << (obs.is_werewolf ? " IS a werewolf" : " is NOT a werewolf") << "\n";
  }

  oss << "\nGame transcript as you saw it:\n";
  if (ctx.transcript.empty()) oss << "(nothing yet)\n";
  for (const auto& line : ctx.transcript) oss << line << "\n";
  if (!ctx.history_summary.empty())
    oss << "\nYour running summary of the game:\n" << ctx.history_summary << "\n";

  if (!ctx.retrieved.empty()) {
    oss << "\nExperience from earlier games similar to this situation, highest "
           "reward first (higher reward = better final outcome):\n";
    for (const auto& e : ctx.retrieved) {
      oss << "- [reward " << (e.reward ? *e.reward : 0.0) << ", as "
          << role_name(e.tags.role) << "] " << e.summary << "\n";
    }
  }

  if (ctx.witch_victim)
    oss << "\nTonight's victim is seat " << *ctx.witch_victim << ".\n";
  if (!ctx.request.first_round_tallies.empty()) {
    oss << "\nFirst-round vote tallies:\n";
    for (const auto& [target, sum] : ctx.request.first_round_tallies)
      oss << "  seat " << target << ": " << sum << " votes\n";
  }

  oss << "\n" << prompts.instruction_for(ctx.request.kind) << "\n";

  oss << "\n[ANSWER-KIND] " << answer_kind_marker(ctx.request.kind) << "\n";
  if (!ctx.request.legal_targets.empty()) {
    oss << "[LEGAL]";
    for (int s : ctx.request.legal_targets) oss << " " << s;
    oss << "\n";
  }
  if (ctx.request.kind == RequestKind::WitchDecision) {
    oss << "[VICTIM] " << (ctx.request.victim ? *ctx.request.victim : -1) << "\n";
    oss << "[CAN-HEAL] " << (ctx.request.can_heal ? "yes" : "no") << "\n";
    oss << "[CAN-POISON] " << (ctx.request.can_poison ? "yes" : "no") << "\n";
  }
  return oss.str();
}

ChatTranscript prompt_transcript(const AgentContext& ctx, const PromptSet& prompts) {
  return ChatTranscript::of(prompts.system_text(), render_prompt(ctx, prompts));
}

}  // namespace wolfarena
