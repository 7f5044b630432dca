#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace blockseq {

// Repo-wide deterministic RNG.
//
// The engine is std::mt19937_64 seeded directly with an explicit 64-bit
// value; its raw output stream is pinned by the standard. Bounded draws use
// rejection sampling on the raw output rather than std::uniform_int_distribution
// (whose algorithm is implementation-defined), so identical seeds give
// identical results on every platform and standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased uniform draw from {0, ..., bound-1}; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // Reject draws from the incomplete final copy of [0, bound).
        const std::uint64_t rem = (0xFFFFFFFFFFFFFFFFull % bound + 1) % bound;  // 2^64 mod bound
        const std::uint64_t zone_end = std::uint64_t{0} - rem;                  // wraps to 0 when rem == 0
        for (;;) {
            const std::uint64_t x = engine_();
            if (rem == 0 || x < zone_end) return x % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

// Fisher-Yates shuffle driven by SeededRng::below, for reproducible
// experiments and tests.
template <class T>
void shuffle(std::vector<T>& values, SeededRng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace blockseq
