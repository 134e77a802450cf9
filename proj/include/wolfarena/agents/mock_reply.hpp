// A scripted chat player for offline runs: it reads the machine-readable
// marker lines of a rendered prompt and answers with a legal, deterministic
// reply (seeded by the prompt text, so different situations produce
// different but reproducible decisions). Plugged into MockProvider as its
// reply function, it drives full games through the real prompt -> complete
// -> parse path without any model.
#pragma once

#include <string>

#include "wolfarena/gateway/provider.hpp"

namespace wolfarena {

std::string scripted_mock_reply(const std::string& prompt);

// Ready-to-use reply function for MockProvider::set_reply_fn.
MockProvider::ReplyFn scripted_player_fn();

}  // namespace wolfarena
