#include "wolfarena/memory/embed.hpp"

#include <cctype>
#include <cstdlib>

#include <json.hpp>

#include "wolfarena/engine/rng.hpp"

namespace wolfarena {

using json = nlohmann::json;

std::string HashedBagEmbedder::name() const {
  return "hashed_bag_" + std::to_string(dims_);
}

Eigen::VectorXd HashedBagEmbedder::embed(const std::string& text) const {
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(dims_);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto bucket = fnv1a(token) % static_cast<std::uint64_t>(dims_);
    counts[static_cast<Eigen::Index>(bucket)] += 1.0;
    token.clear();
  };
  for (unsigned char c : text) {
    if (std::isalnum(c))
      token.push_back(static_cast<char>(std::tolower(c)));
    else
      flush();
  }
  flush();
  double norm = counts.norm();
  if (norm > 0.0) counts /= norm;
  return counts;
}

HttpEmbedder::HttpEmbedder(Config config, Transport transport)
    : config_(std::move(config)), transport_(std::move(transport)) {
  if (!transport_)
    throw EngineError("HttpEmbedder needs a transport (inject one or use the "
                      "gateway default)");
}

Eigen::VectorXd HttpEmbedder::embed(const std::string& text) const {
  const char* key = config_.api_key_env.empty()
                        ? nullptr
                        : std::getenv(config_.api_key_env.c_str());
  if (!config_.api_key_env.empty() && (key == nullptr || *key == '\0'))
    throw AuthError("credential environment variable " + config_.api_key_env +
                    " is not set");
  std::map<std::string, std::string> headers{{"Content-Type", "application/json"}};
  if (key) headers["Authorization"] = std::string("Bearer ") + key;

  json body{{"model", config_.model}, {"input", text}};
  HttpResponse res = transport_(config_.base_url + config_.path, headers, body.dump());
  if (res.status != 200)
    throw ProviderError("embedding service returned HTTP " + std::to_string(res.status));
  json j;
  try {
    j = json::parse(res.body);
  } catch (const std::exception&) {
    throw MalformedProviderReply("embedding reply is not JSON");
  }
  if (!j.contains("data") || !j["data"].is_array() || j["data"].empty() ||
      !j["data"][0].contains("embedding"))
    throw MalformedProviderReply("embedding reply has no data[0].embedding");
  const auto& vec = j["data"][0]["embedding"];
  Eigen::VectorXd out(static_cast<Eigen::Index>(vec.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out[i] = vec[static_cast<std::size_t>(i)].get<double>();
  double norm = out.norm();
  if (norm > 0.0) out /= norm;
  return out;
}

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size())
    throw EngineError("cosine dimension mismatch: " + std::to_string(u.size()) +
                      " vs " + std::to_string(v.size()));
  double nu = u.norm();
  double nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return u.dot(v) / (nu * nv);
}

}  // namespace wolfarena
