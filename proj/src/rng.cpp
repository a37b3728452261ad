#include <qk/errors.hpp>
#include <qk/rng.hpp>

#include <bit>

namespace qk
{
    Rng::Rng(Seed seed)
    {
        auto x = seed.value;
        for (auto & word : _s) {
            word = splitmix64(x);
            x += 0x9e3779b97f4a7c15ULL;
        }
    }

    auto Rng::next() -> std::uint64_t
    {
        const auto result = std::rotl(_s[1] * 5, 7) * 9;
        const auto t = _s[1] << 17;
        _s[2] ^= _s[0];
        _s[3] ^= _s[1];
        _s[1] ^= _s[2];
        _s[0] ^= _s[3];
        _s[2] ^= t;
        _s[3] = std::rotl(_s[3], 45);
        return result;
    }

    auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw ContractViolation("Rng::below needs a positive bound");
        // Largest multiple of bound that fits; reject draws above it.
        const auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            auto x = next();
            if (x < limit)
                return x % bound;
        }
    }

    auto Rng::between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t
    {
        return lo + below(hi - lo + 1);
    }

    auto Rng::unit() -> double
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    auto Rng::bernoulli(double p) -> bool
    {
        if (p >= 1.0)
            return true;
        if (p <= 0.0)
            return false;
        return unit() < p;
    }
}
