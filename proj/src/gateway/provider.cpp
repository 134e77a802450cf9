#include "wolfarena/gateway/provider.hpp"

#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

using json = nlohmann::json;

const char* message_role_name(MessageRole r) {
  switch (r) {
    case MessageRole::System: return "system";
    case MessageRole::User: return "user";
    case MessageRole::Assistant: return "assistant";
  }
  return "?";
}

void ChatTranscript::validate() const {
  if (messages.empty()) throw EngineError("chat transcript is empty");
  if (messages.front().role == MessageRole::Assistant)
    throw EngineError("chat transcript must start with a system or user message");
}

ChatTranscript ChatTranscript::of(std::string system, std::string user) {
  ChatTranscript t;
  t.messages.push_back({MessageRole::System, std::move(system)});
  t.messages.push_back({MessageRole::User, std::move(user)});
  return t;
}

std::uint64_t transcript_fingerprint(const ChatTranscript& transcript) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const auto& m : transcript.messages) {
    h = fnv1a(message_role_name(m.role), h);
    h = fnv1a("\x1f", h);
    h = fnv1a(m.text, h);
    h = fnv1a("\x1e", h);
  }
  return h;
}

std::string MockProvider::complete(const ChatTranscript& transcript,
                                   const GenerationParams& params) {
  (void)params;
  transcript.validate();
  auto it = script_.find(transcript_fingerprint(transcript));
  if (it != script_.end()) return it->second;
  if (reply_fn_) return reply_fn_(transcript);
  return default_reply_;
}

std::string build_chat_completions_body(const ChatTranscript& transcript,
                                        const GenerationParams& params,
                                        const std::string& model) {
  json body;
  body["model"] = model;
  json messages = json::array();
  for (const auto& m : transcript.messages)
    messages.push_back({{"role", message_role_name(m.role)}, {"content", m.text}});
  body["messages"] = messages;
  body["temperature"] = params.temperature;
  body["max_tokens"] = params.max_tokens;
  body["top_p"] = params.top_p;
  return body.dump();
}

std::string parse_chat_completions_reply(const std::string& body, long* prompt_tokens,
                                         long* completion_tokens) {
  json j;
  try {
    j = json::parse(body);
  } catch (const std::exception&) {
    throw MalformedProviderReply("provider reply is not JSON");
  }
  if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].empty())
    throw MalformedProviderReply("provider reply has no choices");
  const auto& choice = j["choices"][0];
  if (!choice.contains("message") || !choice["message"].contains("content") ||
      !choice["message"]["content"].is_string())
    throw MalformedProviderReply("provider reply has no message content");
  if (j.contains("usage") && j["usage"].is_object()) {
    const auto& usage = j["usage"];
    if (prompt_tokens && usage.contains("prompt_tokens"))
      *prompt_tokens = usage["prompt_tokens"].get<long>();
    if (completion_tokens && usage.contains("completion_tokens"))
      *completion_tokens = usage["completion_tokens"].get<long>();
  }
  return choice["message"]["content"].get<std::string>();
}

namespace {

// Default transport built on cpp-httplib. Declared out of line so tests can
// swap it for a fake without touching sockets.
HttpResponse httplib_transport(const std::string& url,
                               const std::map<std::string, std::string>& headers,
                               const std::string& body);

}  // namespace

HttpProvider::HttpProvider(HttpProviderConfig config, Transport transport,
                           Sleeper sleeper, std::uint64_t jitter_seed)
    : config_(std::move(config)),
      transport_(transport ? std::move(transport) : Transport(httplib_transport)),
      sleeper_(sleeper ? std::move(sleeper)
                       : Sleeper([](std::chrono::milliseconds d) {
                           std::this_thread::sleep_for(d);
                         })),
      jitter_state_(jitter_seed) {}

std::chrono::milliseconds HttpProvider::backoff_delay(int attempt) {
  std::lock_guard<std::mutex> lock(jitter_mutex_);
  SplitMix64 rng(jitter_state_);
  jitter_state_ = rng.next();
  auto base = config_.backoff_base.count();
  auto delay = base << attempt;  // exponential
  auto jitter = base > 0 ? static_cast<long long>(jitter_state_ % static_cast<std::uint64_t>(base)) : 0;
  return std::chrono::milliseconds(delay + jitter);
}

std::string HttpProvider::complete(const ChatTranscript& transcript,
                                   const GenerationParams& params) {
  transcript.validate();
  const char* key = config_.api_key_env.empty() ? nullptr
                                                : std::getenv(config_.api_key_env.c_str());
  if (!config_.api_key_env.empty() && (key == nullptr || *key == '\0'))
    throw AuthError("credential environment variable " + config_.api_key_env +
                    " is not set");

  std::map<std::string, std::string> headers{{"Content-Type", "application/json"}};
  if (key) headers["Authorization"] = std::string("Bearer ") + key;
  const std::string url = config_.base_url + config_.path;
  const std::string body = build_chat_completions_body(transcript, params, config_.model);

  {
    std::unique_lock<std::mutex> lock(gate_mutex_);
    gate_cv_.wait(lock, [&] { return in_flight_ < config_.max_concurrent; });
    ++in_flight_;
  }
  struct GateRelease {
    HttpProvider* self;
    ~GateRelease() {
      std::lock_guard<std::mutex> lock(self->gate_mutex_);
      --self->in_flight_;
      self->gate_cv_.notify_one();
    }
  } release{this};

  HttpResponse last{};
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    if (attempt > 0) sleeper_(backoff_delay(attempt - 1));
    last = transport_(url, headers, body);
    if (last.status == 401 || last.status == 403)
      throw AuthError("provider rejected the credential (HTTP " +
                      std::to_string(last.status) + ")");
    bool retryable = last.status == 0 || last.status == 429 || last.status >= 500;
    if (retryable) continue;

    CallRecord record;
    record.model = config_.model;
    record.status = last.status;
    record.attempts = attempt + 1;
    std::string text =
        parse_chat_completions_reply(last.body, &record.prompt_tokens,
                                     &record.completion_tokens);
    if (record.prompt_tokens >= 0) prompt_tokens_ += record.prompt_tokens;
    if (record.completion_tokens >= 0) completion_tokens_ += record.completion_tokens;
    if (call_logger_) call_logger_(record);
    return text;
  }
  if (last.status == 429)
    throw RateLimited("provider still rate-limiting after " +
                      std::to_string(config_.max_attempts) + " attempts");
  throw ProviderError("provider unreachable after " +
                      std::to_string(config_.max_attempts) + " attempts (last HTTP " +
                      std::to_string(last.status) + ")");
}

}  // namespace wolfarena

// httplib pulls in a lot; keep it isolated at the bottom of this TU.
#include <httplib.h>

namespace wolfarena {
namespace {

HttpResponse httplib_transport(const std::string& url,
                               const std::map<std::string, std::string>& headers,
                               const std::string& body) {
  auto split = url.find('/', url.find("//") + 2);
  std::string host = split == std::string::npos ? url : url.substr(0, split);
  std::string path = split == std::string::npos ? "/" : url.substr(split);

  httplib::Client client(host);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  httplib::Headers hdrs;
  for (const auto& [k, v] : headers) hdrs.emplace(k, v);
  auto res = client.Post(path, hdrs, body, "application/json");
  if (!res) return {0, ""};
  return {res->status, res->body};
}

}  // namespace
}  // namespace wolfarena
