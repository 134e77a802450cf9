// Seeded PRNG used for every random decision in the arena. SplitMix64 is
// tiny, fast, and bit-reproducible across platforms, which is all the
// engine needs: the only consumer of randomness inside a game is the role
// shuffle, everything else is tie-broken deterministically.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace wolfarena {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at game scale; what matters
  // is that every implementation of this generator agrees bit for bit.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Stable 64-bit combiner for deriving child seeds (per-game seeds from the
// master seed, per-seat streams from the game seed, ...).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x9E3779B97F4A7C15ull + (b << 1)));
  return g.next();
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

// In-place Fisher-Yates driven by SplitMix64.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

// FNV-1a, the arena's canonical content hash (config digests, mock
// fingerprints, the test embedder).
inline std::uint64_t fnv1a_bytes(const void* data, std::size_t size,
                                 std::uint64_t h = 0xCBF29CE484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x00000100000001B3ull;
  }
  return h;
}

inline std::uint64_t fnv1a(std::string_view text,
                           std::uint64_t h = 0xCBF29CE484222325ull) {
  return fnv1a_bytes(text.data(), text.size(), h);
}

}  // namespace wolfarena
