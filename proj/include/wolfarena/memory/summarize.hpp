// Global summaries over a seat's accumulated visible history. The summary
// doubles as the experience payload and as the retrieval query.
#pragma once

#include <string>
#include <vector>

#include "wolfarena/gateway/provider.hpp"

namespace wolfarena {

// Asks the provider for a compact game summary from this seat's point of
// view. Throws on an empty transcript; provider errors propagate.
std::string summarize(const std::vector<std::string>& visible_transcript,
                      Provider& provider, const GenerationParams& params = {});

// Deterministic local summarizer for agents that have no model in the loop:
// the tail of the visible transcript, joined. Same contract, no provider.
std::string local_summary(const std::vector<std::string>& visible_transcript);

}  // namespace wolfarena
