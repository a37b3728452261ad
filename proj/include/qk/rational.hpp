#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace qk
{
    /// Exact non-overflowing-in-practice rational, always normalised with a
    /// positive denominator.
    struct Rational
    {
        std::int64_t num = 0;
        std::int64_t den = 1;

        constexpr Rational() = default;
        constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d)
        {
            if (den < 0) {
                num = -num;
                den = -den;
            }
            auto g = std::gcd(num < 0 ? -num : num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }

        /// x <= *this for an integer x, without floating point.
        constexpr auto admits(std::int64_t x) const -> bool { return x * den <= num; }

        friend constexpr auto operator==(const Rational &, const Rational &) -> bool = default;

        auto to_string() const -> std::string
        {
            return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
        }

        constexpr auto to_double() const -> double { return static_cast<double>(num) / static_cast<double>(den); }
    };
}
