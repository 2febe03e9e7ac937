#pragma once

#include <cstdint>

namespace noiserect {

// Counter-based deterministic generator (splitmix64 stream). The same seed
// and the same consumption order yield bit-identical value streams on every
// platform; the libstdc++/libc++ distributions make no such guarantee, so
// normal deviates are produced here with an explicit Box-Muller transform.
//
// Stream accounting: position() counts raw 64-bit draws. uniform01() consumes
// one draw, normal() always consumes exactly two (no spare-value caching), so
// a consumer can be repositioned by arithmetic alone.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), position_(0) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++position_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1]; never returns 0 so log() is always finite.
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; consumes exactly two draws.
    double normal();

    // Stable seed derivation for independent sub-streams (sweep rows, bias
    // directions). Mixes so that nearby (seed, index) pairs decorrelate.
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

private:
    std::uint64_t seed_;
    std::uint64_t position_;
};

}  // namespace noiserect
