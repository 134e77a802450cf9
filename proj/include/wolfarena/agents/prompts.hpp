// Prompt construction for chat-model agents. Each request kind has a small
// instruction template; experiments can override any of them by dropping a
// <kind>.txt file into a prompt directory. The rendered prompt always ends
// with machine-readable marker lines ([ANSWER-KIND], [LEGAL], ...) so both
// models and the scripted mock provider know the exact answer format.
#pragma once

#include <map>
#include <string>

#include "wolfarena/agents/context.hpp"
#include "wolfarena/gateway/chat.hpp"

namespace wolfarena {

class PromptSet {
 public:
  // Built-in templates, always complete.
  static PromptSet builtin();
  // Overrides from <dir>/<request-kind>.txt and <dir>/system.txt; missing
  // files keep the built-in text.
  static PromptSet from_directory(const std::string& dir);

  const std::string& system_text() const { return system_; }
  const std::string& instruction_for(RequestKind kind) const;

 private:
  std::string system_;
  std::map<RequestKind, std::string> instructions_;
};

// The [ANSWER-KIND] marker value for each request kind.
const char* answer_kind_marker(RequestKind kind);

std::string render_prompt(const AgentContext& context, const PromptSet& prompts);

// System + user messages ready for a provider call.
ChatTranscript prompt_transcript(const AgentContext& context, const PromptSet& prompts);

}  // namespace wolfarena
