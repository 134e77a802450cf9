// Text embeddings behind a small interface. Production runs plug in an
// external sentence-embedding service; tests and offline runs use the
// deterministic hashed bag-of-tokens embedder, which is bit-reproducible
// with no model download.
#pragma once

#include <memory>
#include <string>

#include <Eigen/Core>

#include "wolfarena/engine/types.hpp"
#include "wolfarena/gateway/provider.hpp"

namespace wolfarena {

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual Eigen::VectorXd embed(const std::string& text) const = 0;
  virtual int dimension() const = 0;
  virtual std::string name() const = 0;
};

// Lowercase, split on non-alphanumerics, FNV-1a each token into a fixed
// number of buckets, count, L2-normalize. Empty text maps to the zero
// vector. Token order never matters.
class HashedBagEmbedder final : public Embedder {
 public:
  explicit HashedBagEmbedder(int dims = 256) : dims_(dims) {}
  Eigen::VectorXd embed(const std::string& text) const override;
  int dimension() const override { return dims_; }
  std::string name() const override;

 private:
  int dims_;
};

// Calls an embeddings endpoint speaking the common {model, input} wire
// format; the transport seam mirrors HttpProvider so tests can fake it.
class HttpEmbedder final : public Embedder {
 public:
  struct Config {
    std::string base_url;
    std::string path = "/v1/embeddings";
    std::string model;
    std::string api_key_env;
    int dimension = 768;
  };

  explicit HttpEmbedder(Config config, Transport transport = {});
  Eigen::VectorXd embed(const std::string& text) const override;
  int dimension() const override { return config_.dimension; }
  std::string name() const override { return config_.model; }

 private:
  Config config_;
  Transport transport_;
};

// dot(u,v) / (|u||v|), defined as 0 when either norm is 0. Throws on
// dimension mismatch.
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

}  // namespace wolfarena
