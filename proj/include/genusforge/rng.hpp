#pragma once

// Deterministic splitmix64 generator used by the samplers. Value-type state so
// streams can be split and replayed; stream(seed, index) derives independent
// per-shard generators by avalanche-mixing the pair, which keeps shard outputs
// decorrelated even for adjacent indices.

#include <cstdint>
#include <stdexcept>

namespace genusforge {

class RngState {
  public:
    explicit RngState(uint64_t seed) : state_(seed) {}

    static RngState stream(uint64_t seed, uint64_t index) {
        return RngState(mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform value in [0, n) via rejection, so every residue is equally
    // likely regardless of n.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::domain_error("RngState::below: empty range");
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
};

}  // namespace genusforge
