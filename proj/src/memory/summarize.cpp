#include "wolfarena/memory/summarize.hpp"

#include <sstream>

namespace wolfarena {

std::string summarize(const std::vector<std::string>& visible_transcript,
                      Provider& provider, const GenerationParams& params) {
  if (visible_transcript.empty())
    throw EngineError("cannot summarize an empty transcript");
  std::ostringstream user;
  user << "Here is everything you have observed in the current werewolf game, "
          "in order:\n\n";
  for (const auto& line : visible_transcript) user << line << "\n";
  user << "\nWrite a compact summary of the game so far from your point of "
          "view: the key claims, the voting blocks, and whom you suspect and "
          "why. Answer with the summary text only.\n[ANSWER-KIND] SUMMARIZE\n";
  ChatTranscript transcript = ChatTranscript::of(
      "You are a werewolf game analyst. You compress game transcripts into "
      "short, information-dense summaries.",
      user.str());
  return provider.complete(transcript, params);
}

std::string local_summary(const std::vector<std::string>& visible_transcript) {
  if (visible_transcript.empty())
    throw EngineError("cannot summarize an empty transcript");
  constexpr std::size_t kTail = 12;
  std::size_t start = visible_transcript.size() > kTail
                          ? visible_transcript.size() - kTail
                          : 0;
  std::ostringstream oss;
  for (std::size_t i = start; i < visible_transcript.size(); ++i) {
    if (i > start) oss << " | ";
    oss << visible_transcript[i];
  }
  return oss.str();
}

}  // namespace wolfarena
