#pragma once

// Deterministic random source. mt19937_64 output is pinned by the standard,
// but std::uniform_int_distribution is not, so the integer draw is done here
// by rejection sampling. Same seed => same coordinates, bit for bit, on any
// conforming platform. Reports quote seeds for exactly this reason.

#include <cstdint>
#include <random>

namespace prodembed {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : gen_(seed) {}

    // Uniform on [lo, hi], inclusive, without modulo bias.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1; // hi >= lo
        if (span == 0) // full 64-bit range
            return static_cast<std::int64_t>(gen_());
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace prodembed
