#pragma once

#include <cstdint>

namespace reasonkit {

// SplitMix64. Standard-library distributions are implementation-defined, and
// fold splits / instance sampling must reproduce bit-for-bit from a seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool chance(double p) { return double(next() >> 11) * 0x1.0p-53 < p; }

  private:
    std::uint64_t state_;
};

} // namespace reasonkit
