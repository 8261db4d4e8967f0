#pragma once

#include <cstdint>

namespace p1p1::fat {

// SplitMix64 (Steele, Lea, Flood). Fixed algorithm so sampled
// configurations are identical on every platform.
class SplitMix64 {
public:
    static constexpr const char* name = "splitmix64";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Independent child stream.
    SplitMix64 split() noexcept { return SplitMix64(next()); }

    // Uniform on [0, bound] by rejection, avoiding the implementation-defined
    // std::uniform_int_distribution.
    std::uint64_t uniform(std::uint64_t bound) noexcept
    {
        const std::uint64_t range = bound + 1;
        if (range == 0) return next();
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % range;
    }

private:
    std::uint64_t state_;
};

} // namespace p1p1::fat
