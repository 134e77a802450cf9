// Chat-completion wire types shared by all providers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wolfarena/engine/types.hpp"

namespace wolfarena {

// Generation defaults match the arena's benchmark configuration.
struct GenerationParams {
  double temperature = 1.0;
  int max_tokens = 2048;
  double top_p = 1.0;
};

enum class MessageRole { System, User, Assistant };

const char* message_role_name(MessageRole r);

struct ChatMessage {
  MessageRole role = MessageRole::User;
  std::string text;
};

struct ChatTranscript {
  std::vector<ChatMessage> messages;

  // Nonempty, starting with a system or user message.
  void validate() const;

  static ChatTranscript of(std::string system, std::string user);
};

// Stable content hash of a transcript, used to key mock scripts.
std::uint64_t transcript_fingerprint(const ChatTranscript& transcript);

}  // namespace wolfarena
