#include "wolfarena/agents/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace wolfarena {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::vector<std::string> split_lines(const std::string& raw) {
  std::vector<std::string> lines;
  std::istringstream iss(raw);
  std::string line;
  while (std::getline(iss, line)) lines.push_back(line);
  return lines;
}

// First line starting with "KEYWORD:" (case-insensitive); returns the value
// part, trimmed.
std::optional<std::string> keyword_value(const std::vector<std::string>& lines,
                                         const std::string& keyword) {
  std::string prefix = upper(keyword) + ":";
  for (const auto& line : lines) {
    std::string t = trim(line);
    if (upper(t).rfind(prefix, 0) == 0) return trim(t.substr(prefix.size()));
  }
  return std::nullopt;
}

std::optional<int> parse_int(const std::string& value) {
  if (value.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    int n = std::stoi(value, &pos);
    // trailing prose after the number is tolerated ("VOTE: 3 because ...")
    if (pos < value.size() && std::isalnum(static_cast<unsigned char>(value[pos])))
      return std::nullopt;
    return n;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ParseOutcome illegal_target(int target, const ActionRequest& request) {
  std::ostringstream oss;
  oss << "illegal target " << target << "; legal targets:";
  for (int s : request.legal_targets) oss << " " << s;
  return ParseError{oss.str()};
}

ParseOutcome parse_seat_keyword(const std::string& raw, const std::string& keyword,
                                const ActionRequest& request, AgentResponse base) {
  auto value = keyword_value(split_lines(raw), keyword);
  if (!value) return ParseError{"missing " + keyword + ": line"};
  auto n = parse_int(*value);
  if (!n) return ParseError{"malformed " + keyword + ": value '" + *value + "'"};
  if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
  base.target = *n;
  return base;
}

ParseOutcome parse_ballot(const std::string& raw, const ActionRequest& request,
                          AgentResponse base) {
  auto value = keyword_value(split_lines(raw), "VOTE");
  if (!value) return ParseError{"missing VOTE: line"};
  if (upper(*value).rfind("ABSTAIN", 0) == 0) return base;  // target stays empty
  auto n = parse_int(*value);
  if (!n) return ParseError{"malformed VOTE: value '" + *value + "'"};
  if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
  base.target = *n;
  return base;
}

ParseOutcome parse_witch(const std::string& raw, const ActionRequest& request,
                         AgentResponse base) {
  auto lines = split_lines(raw);
  if (auto heal = keyword_value(lines, "HEAL")) {
    std::string v = upper(*heal);
    if (v.rfind("YES", 0) == 0)
      base.heal = true;
    else if (v.rfind("NO", 0) != 0)
      return ParseError{"malformed HEAL: value '" + *heal + "'"};
  }
  if (auto poison = keyword_value(lines, "POISON")) {
    std::string v = upper(*poison);
    if (v.rfind("NONE", 0) != 0 && v.rfind("NO", 0) != 0) {
      auto n = parse_int(*poison);
      if (!n) return ParseError{"malformed POISON: value '" + *poison + "'"};
      if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
      base.poison = *n;
    }
  }
  if (base.heal && !request.can_heal) return ParseError{"healing potion not available"};
  if (base.poison && !request.can_poison) return ParseError{"poison not available"};
  if (base.heal && base.poison && !request.can_use_both)
    return ParseError{"only one potion may be used per night"};
  return base;
}

ParseOutcome parse_hunter(const std::string& raw, const ActionRequest& request,
                          AgentResponse base) {
  auto value = keyword_value(split_lines(raw), "SHOOT");
  if (!value) return ParseError{"missing SHOOT: line"};
  std::string v = upper(*value);
  if (v.rfind("NONE", 0) == 0 || v.rfind("NO", 0) == 0) return base;
  auto n = parse_int(*value);
  if (!n) return ParseError{"malformed SHOOT: value '" + *value + "'"};
  if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
  base.target = *n;
  return base;
}

ParseOutcome parse_speech(const std::string& raw, AgentResponse base) {
  std::string text = trim(raw);
  std::string u = upper(text);
  if (u.rfind("SAY:", 0) == 0) text = trim(text.substr(4));
  if (text.empty()) return ParseError{"empty speech"};
  base.text = text;
  return base;
}

ParseOutcome parse_summary(const std::string& raw, const ActionRequest& request,
                           AgentResponse base) {
  auto lines = split_lines(raw);
  auto value = keyword_value(lines, "RECOMMEND");
  if (!value) return ParseError{"missing RECOMMEND: line"};
  auto n = parse_int(*value);
  if (!n) return ParseError{"malformed RECOMMEND: value '" + *value + "'"};
  if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
  base.recommended = *n;
  std::ostringstream text;
  bool first = true;
  for (const auto& line : lines) {
    if (upper(trim(line)).rfind("RECOMMEND:", 0) == 0) continue;
    if (trim(line).empty()) continue;
    if (!first) text << "\n";
    text << trim(line);
    first = false;
  }
  base.text = first ? std::string("(no summary)") : text.str();
  return base;
}

ParseOutcome parse_inference(const std::string& raw, const ActionRequest& request,
                             AgentResponse base) {
  // Scan for seat<k>=<word> / seat <k>: <word> tokens anywhere in the reply.
  std::string low;
  low.reserve(raw.size());
  for (char c : raw) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

  std::size_t pos = 0;
  while ((pos = low.find("seat", pos)) != std::string::npos) {
    pos += 4;
    std::size_t i = pos;
    while (i < low.size() && low[i] == ' ') ++i;
    std::size_t digits_start = i;
    while (i < low.size() && std::isdigit(static_cast<unsigned char>(low[i]))) ++i;
    if (i == digits_start) continue;
    int seat = std::stoi(low.substr(digits_start, i - digits_start));
    while (i < low.size() && (low[i] == ' ' || low[i] == '=' || low[i] == ':')) ++i;
    std::size_t word_start = i;
    while (i < low.size() && std::isalpha(static_cast<unsigned char>(low[i]))) ++i;
    std::string word = low.substr(word_start, i - word_start);
    std::optional<Camp> camp;
    if (word == "werewolf" || word == "wolf")
      camp = Camp::Wolf;
    else if (word == "good" || word == "villager")
      camp = Camp::Good;
    if (!camp) continue;
    if (!request.legal_targets.count(seat)) return illegal_target(seat, request);
    base.claims.emplace(seat, *camp);  // first claim per seat wins
  }
  for (int target : request.legal_targets)
    if (!base.claims.count(target))
      return ParseError{"missing claim for seat " + std::to_string(target)};
  return base;
}

ParseOutcome parse_order(const std::string& raw, const ActionRequest& request,
                         AgentResponse base) {
  auto lines = split_lines(raw);
  auto start = keyword_value(lines, "START");
  if (!start) return ParseError{"missing START: line"};
  auto n = parse_int(*start);
  if (!n) return ParseError{"malformed START: value '" + *start + "'"};
  if (!request.legal_targets.count(*n)) return illegal_target(*n, request);
  base.start = *n;
  if (auto dir = keyword_value(lines, "DIRECTION")) {
    std::string v = upper(*dir);
    if (v.rfind("UP", 0) == 0 || v.rfind("ASC", 0) == 0)
      base.ascending = true;
    else if (v.rfind("DOWN", 0) == 0 || v.rfind("DESC", 0) == 0)
      base.ascending = false;
    else
      return ParseError{"malformed DIRECTION: value '" + *dir + "'"};
  }
  return base;
}

}  // namespace

ParseOutcome parse_response(const std::string& raw, const ActionRequest& request) {
  AgentResponse base;
  base.kind = request.kind;
  base.seat = request.seat;
  switch (request.kind) {
    case RequestKind::WolfProposal:
      return parse_seat_keyword(raw, "KILL", request, base);
    case RequestKind::GuardTarget:
      return parse_seat_keyword(raw, "GUARD", request, base);
    case RequestKind::SeerTarget:
      return parse_seat_keyword(raw, "CHECK", request, base);
    case RequestKind::WitchDecision:
      return parse_witch(raw, request, base);
    case RequestKind::HunterShot:
      return parse_hunter(raw, request, base);
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot:
      return parse_ballot(raw, request, base);
    case RequestKind::Speech:
      return parse_speech(raw, base);
    case RequestKind::SheriffSummaryRequest:
      return parse_summary(raw, request, base);
    case RequestKind::InferenceRequest:
      return parse_inference(raw, request, base);
    case RequestKind::SpeakingOrderChoice:
      return parse_order(raw, request, base);
  }
  return ParseError{"unknown request kind"};
}

std::string render_response(const AgentResponse& r) {
  std::ostringstream oss;
  switch (r.kind) {
    case RequestKind::WolfProposal:
      oss << "KILL: " << *r.target;
      break;
    case RequestKind::GuardTarget:
      oss << "GUARD: " << *r.target;
      break;
    case RequestKind::SeerTarget:
      oss << "CHECK: " << *r.target;
      break;
    case RequestKind::WitchDecision:
      oss << "HEAL: " << (r.heal ? "YES" : "NO") << "\nPOISON: ";
      if (r.poison)
        oss << *r.poison;
      else
        oss << "NONE";
      break;
    case RequestKind::HunterShot:
      oss << "SHOOT: ";
      if (r.target)
        oss << *r.target;
      else
        oss << "NONE";
      break;
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot:
      oss << "VOTE: ";
      if (r.target)
        oss << *r.target;
      else
        oss << "ABSTAIN";
      break;
    case RequestKind::Speech:
      oss << r.text;
      break;
    case RequestKind::SheriffSummaryRequest:
      oss << "RECOMMEND: " << *r.recommended << "\n" << r.text;
      break;
    case RequestKind::InferenceRequest: {
      bool first = true;
      for (const auto& [target, camp] : r.claims) {
        if (!first) oss << "\n";
        oss << "seat" << target << "=" << (camp == Camp::Wolf ? "werewolf" : "good");
        first = false;
      }
      break;
    }
    case RequestKind::SpeakingOrderChoice:
      oss << "START: " << *r.start << "\nDIRECTION: " << (r.ascending ? "UP" : "DOWN");
      break;
  }
  return oss.str();
}

AgentResponse deterministic_fallback(const ActionRequest& request) {
  AgentResponse r;
  r.kind = request.kind;
  r.seat = request.seat;
  r.via_fallback = true;
  int lowest = request.legal_targets.empty() ? -1 : *request.legal_targets.begin();
  switch (request.kind) {
    case RequestKind::WolfProposal:
    case RequestKind::GuardTarget:
    case RequestKind::SeerTarget:
      r.target = lowest;
      break;
    case RequestKind::WitchDecision:
      break;  // keep both potions
    case RequestKind::HunterShot:
      break;  // decline
    case RequestKind::ElectionBallot:
    case RequestKind::PseudoBallot:
    case RequestKind::OfficialBallot:
    case RequestKind::TiebreakBallot:
      break;  // abstain
    case RequestKind::Speech:
      r.text = "(no statement)";
      break;
    case RequestKind::SheriffSummaryRequest:
      r.recommended = lowest;
      r.text = "(no summary)";
      break;
    case RequestKind::InferenceRequest:
      for (int target : request.legal_targets) r.claims.emplace(target, Camp::Good);
      break;
    case RequestKind::SpeakingOrderChoice:
      r.start = lowest;
      r.ascending = true;
      break;
  }
  return r;
}

}  // namespace wolfarena
