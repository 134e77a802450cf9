// Uniform chat-completion provider interface. One generic HTTP adapter talks
// the de-facto chat-completions wire format to any configured base URL; a
// deterministic mock provider serves tests and offline runs. No
// provider-specific code paths.
#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "wolfarena/gateway/chat.hpp"

namespace wolfarena {

struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AuthError : ProviderError {
  using ProviderError::ProviderError;
};
struct RateLimited : ProviderError {
  using ProviderError::ProviderError;
};
struct MalformedProviderReply : ProviderError {
  using ProviderError::ProviderError;
};

class Provider {
 public:
  virtual ~Provider() = default;
  virtual std::string complete(const ChatTranscript& transcript,
                               const GenerationParams& params) = 0;
  virtual std::string name() const = 0;
};

// Deterministic provider for tests: exact fingerprint hits return the
// scripted text, misses fall through to a reply function (when set) or to
// the configured default text.
class MockProvider final : public Provider {
 public:
  using ReplyFn = std::function<std::string(const ChatTranscript&)>;

  explicit MockProvider(std::map<std::uint64_t, std::string> script = {},
                        std::string default_reply = "VOTE: ABSTAIN")
      : script_(std::move(script)), default_reply_(std::move(default_reply)) {}

  void script_reply(const ChatTranscript& transcript, std::string reply) {
    script_[transcript_fingerprint(transcript)] = std::move(reply);
  }
  void set_reply_fn(ReplyFn fn) { reply_fn_ = std::move(fn); }

  std::string complete(const ChatTranscript& transcript,
                       const GenerationParams& params) override;
  std::string name() const override { return "mock"; }

 private:
  std::map<std::uint64_t, std::string> script_;
  std::string default_reply_;
  ReplyFn reply_fn_;
};

struct HttpResponse {
  int status = 0;  // 0 = transport-level failure
  std::string body;
};

// Injectable seams so retry behavior is testable without sockets or sleeps.
using Transport = std::function<HttpResponse(
    const std::string& url, const std::map<std::string, std::string>& headers,
    const std::string& body)>;
using Sleeper = std::function<void(std::chrono::milliseconds)>;

struct HttpProviderConfig {
  std::string base_url;  // scheme + host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key_env;  // environment variable holding the credential
  int max_attempts = 3;
  std::chrono::milliseconds backoff_base{500};
  int max_concurrent = 4;  // in-flight request cap per provider handle
};

struct CallRecord {
  std::string model;
  int status = 0;
  int attempts = 0;
  long prompt_tokens = -1;      // -1 when the provider does not report usage
  long completion_tokens = -1;
};

class HttpProvider final : public Provider {
 public:
  explicit HttpProvider(HttpProviderConfig config, Transport transport = {},
                        Sleeper sleeper = {}, std::uint64_t jitter_seed = 1);

  std::string complete(const ChatTranscript& transcript,
                       const GenerationParams& params) override;
  std::string name() const override { return config_.model; }

  void set_call_logger(std::function<void(const CallRecord&)> logger) {
    call_logger_ = std::move(logger);
  }
  long total_prompt_tokens() const { return prompt_tokens_.load(); }
  long total_completion_tokens() const { return completion_tokens_.load(); }

 private:
  std::chrono::milliseconds backoff_delay(int attempt);

  HttpProviderConfig config_;
  Transport transport_;
  Sleeper sleeper_;
  std::uint64_t jitter_state_;
  std::mutex jitter_mutex_;

  // Simple counting gate implementing the per-provider concurrency cap.
  std::mutex gate_mutex_;
  std::condition_variable gate_cv_;
  int in_flight_ = 0;

  std::atomic<long> prompt_tokens_{0};
  std::atomic<long> completion_tokens_{0};
  std::function<void(const CallRecord&)> call_logger_;
};

std::string build_chat_completions_body(const ChatTranscript& transcript,
                                        const GenerationParams& params,
                                        const std::string& model);
std::string parse_chat_completions_reply(const std::string& body, long* prompt_tokens,
                                         long* completion_tokens);

}  // namespace wolfarena
