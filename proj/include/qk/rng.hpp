#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qk
{
    struct Seed
    {
        std::uint64_t value = 0;
    };

    /// SplitMix64 step (Steele, Lea, Flood 2014). Also used to derive
    /// per-sample seeds: sample i of a sweep seeded with s uses
    /// splitmix64(s + i).
    constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64.
    /// Every draw below is defined in terms of next() only, so output is
    /// identical on every platform and standard library.
    class Rng
    {
    public:
        explicit Rng(Seed seed);

        auto next() -> std::uint64_t;

        /// Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
        auto below(std::uint64_t bound) -> std::uint64_t;
        /// Uniform integer in [lo, hi].
        auto between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t;
        /// Uniform double in [0, 1) with 53 random bits.
        auto unit() -> double;
        auto bernoulli(double p) -> bool;

        template <typename T>
        auto shuffle(std::vector<T> & items) -> void
        {
            for (std::size_t i = items.size(); i > 1; --i)
                std::swap(items[i - 1], items[below(i)]);
        }

    private:
        std::uint64_t _s[4];
    };
}
