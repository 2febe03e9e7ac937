#include "noiserect/rng.hpp"

#include <cmath>
#include <numbers>

namespace noiserect {

double SeededRng::normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t SeededRng::derive_seed(std::uint64_t base, std::uint64_t index) {
    SeededRng mixer(base ^ 0xD1B54A32D192ED03ULL);
    mixer.position_ = index * 0x2545F4914F6CDD1DULL;
    return mixer.next_u64();
}

}  // namespace noiserect
