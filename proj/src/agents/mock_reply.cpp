#include "wolfarena/agents/mock_reply.hpp"

#include <sstream>
#include <vector>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

namespace {

std::string marker_value(const std::string& prompt, const std::string& marker) {
  std::string tag = "[" + marker + "]";
  auto pos = prompt.rfind(tag);
  if (pos == std::string::npos) return "";
  auto start = pos + tag.size();
  auto end = prompt.find('\n', start);
  if (end == std::string::npos) end = prompt.size();
  std::string value = prompt.substr(start, end - start);
  while (!value.empty() && value.front() == ' ') value.erase(value.begin());
  return value;
}

std::vector<int> parse_seats(const std::string& value) {
  std::vector<int> seats;
  std::istringstream iss(value);
  int n;
  while (iss >> n) seats.push_back(n);
  return seats;
}

const char* kMockSpeeches[] = {
    "I see no hard evidence yet; I will vote with the majority of honest reads.",
    "The night result narrows it down. Watch who deflects this round.",
    "I am good camp. The real wolves are pushing the quiet seats.",
    "Let us not scatter our votes; pick one suspect and commit.",
};

const char* kMockSummaryWords[] = {
    "suspicion", "pressure", "alliance", "deflection", "claims",
    "momentum", "doubt",     "panic",    "logic",      "bluff",
};

}  // namespace

std::string scripted_mock_reply(const std::string& prompt) {
  std::uint64_t h = fnv1a(prompt);
  std::string kind = marker_value(prompt, "ANSWER-KIND");
  std::vector<int> legal = parse_seats(marker_value(prompt, "LEGAL"));
  auto pick = [&](std::uint64_t salt) -> int {
    if (legal.empty()) return 0;
    return legal[mix_seed(h, salt) % legal.size()];
  };
  std::ostringstream oss;

  if (kind == "KILL") {
    oss << "KILL: " << pick(1);
  } else if (kind == "GUARD") {
    oss << "GUARD: " << pick(2);
  } else if (kind == "CHECK") {
    oss << "CHECK: " << pick(3);
  } else if (kind == "WITCH") {
    bool can_heal = marker_value(prompt, "CAN-HEAL") == "yes";
    bool can_poison = marker_value(prompt, "CAN-POISON") == "yes";
    if (can_heal && h % 2 == 0) {
      oss << "HEAL: YES\nPOISON: NONE";
    } else if (can_poison && h % 3 == 0) {
      oss << "HEAL: NO\nPOISON: " << pick(4);
    } else {
      oss << "HEAL: NO\nPOISON: NONE";
    }
  } else if (kind == "SHOOT") {
    oss << "SHOOT: " << pick(5);
  } else if (kind == "VOTE") {
    if (h % 13 == 0)
      oss << "VOTE: ABSTAIN";
    else
      oss << "VOTE: " << pick(6);
  } else if (kind == "SPEECH") {
    oss << kMockSpeeches[h % std::size(kMockSpeeches)];
  } else if (kind == "SUMMARY") {
    oss << "RECOMMEND: " << pick(7)
        << "\nThe first vote scattered; this seat drew the strongest suspicion.";
  } else if (kind == "INFER") {
    bool first = true;
    for (int seat : legal) {
      if (!first) oss << "\n";
      oss << "seat" << seat << "="
          << (mix_seed(h, static_cast<std::uint64_t>(seat)) % 3 == 0 ? "werewolf"
                                                                     : "good");
      first = false;
    }
  } else if (kind == "ORDER") {
    oss << "START: " << pick(8) << "\nDIRECTION: " << (h % 2 == 0 ? "UP" : "DOWN");
  } else if (kind == "SUMMARIZE") {
    oss << "Game so far: " << kMockSummaryWords[h % std::size(kMockSummaryWords)]
        << " around seat " << (legal.empty() ? static_cast<int>(h % 8) : pick(9))
        << ", " << kMockSummaryWords[mix_seed(h, 11) % std::size(kMockSummaryWords)]
        << " in the votes, " << kMockSummaryWords[mix_seed(h, 12) % std::size(kMockSummaryWords)]
        << " rising.";
  } else {
    oss << "VOTE: ABSTAIN";
  }
  return oss.str();
}

MockProvider::ReplyFn scripted_player_fn() {
  return [](const ChatTranscript& transcript) {
    return scripted_mock_reply(transcript.messages.back().text);
  };
}

}  // namespace wolfarena
