// Deterministic replay verification: the agent responses encoded in a log
// are fed back through a fresh engine, and the regenerated event stream must
// match the logged one event for event. Any edit that alters the causal
// chain, and any truncation, fails with the index of the first divergence.
#pragma once

#include <optional>
#include <string>

#include "wolfarena/engine/log_io.hpp"

namespace wolfarena {

struct ReplayResult {
  bool passed = false;
  std::string message;
  std::optional<std::size_t> divergence_index;  // 0-based event index

  static ReplayResult pass() { return {true, "PASS", std::nullopt}; }
  static ReplayResult fail(std::string message,
                           std::optional<std::size_t> index = std::nullopt) {
    return {false, std::move(message), index};
  }
};

ReplayResult replay_log(const GameLog& log);
ReplayResult replay_file(const std::string& path);

}  // namespace wolfarena
