#pragma once

#include <cstdint>

#include "bopd/graph.hpp"

namespace bopd {

/// splitmix64: the fixed, documented generator behind every randomized
/// component. Standard-library distributions are avoided on purpose; their
/// algorithms are implementation-defined and would break byte-identical
/// reruns across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection. Requires bound >= 1.
    std::uint64_t nextBelow(std::uint64_t bound);

    /// Uniform big integer in [0, bound) by rejection over 64-bit limbs.
    BigInt nextBigBelow(const BigInt& bound);

private:
    std::uint64_t state_;
};

/// Per-sample substream seed: masterSeed, size and index mixed through
/// splitmix64 steps, so samples are independent and order-insensitive.
std::uint64_t substreamSeed(std::uint64_t masterSeed, std::uint64_t size, std::uint64_t index);

}  // namespace bopd
