#include "bopd/rng.hpp"

#include <limits>
#include <stdexcept>

namespace bopd {

std::uint64_t SplitMix64::nextBelow(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be >= 1");
    // Rejection over the largest multiple of bound.
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

BigInt SplitMix64::nextBigBelow(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("bound must be >= 1");
    if (bound <= std::numeric_limits<std::uint64_t>::max())
        return BigInt(nextBelow(static_cast<std::uint64_t>(bound)));
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    unsigned limbs = (bits + 63) / 64;
    for (;;) {
        BigInt x = 0;
        for (unsigned i = 0; i < limbs; ++i) {
            x <<= 64;
            x += BigInt(next());
        }
        x >>= (limbs * 64 - bits);
        if (x < bound) return x;
    }
}

std::uint64_t substreamSeed(std::uint64_t masterSeed, std::uint64_t size, std::uint64_t index) {
    SplitMix64 mix(masterSeed);
    std::uint64_t a = mix.next() ^ size;
    SplitMix64 mix2(a);
    std::uint64_t b = mix2.next() ^ index;
    SplitMix64 mix3(b);
    return mix3.next();
}

}  // namespace bopd
