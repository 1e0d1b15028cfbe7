#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ramsey
{
    /// Exact reduced fraction with positive denominator.
    class Rational
    {
    public:
        constexpr Rational() = default;

        constexpr Rational(std::int64_t numerator, std::int64_t denominator = 1)
        {
            if (denominator == 0)
                throw std::invalid_argument("Rational: zero denominator");
            if (denominator < 0) {
                numerator = -numerator;
                denominator = -denominator;
            }
            auto g = std::gcd(numerator, denominator);
            _numerator = numerator / g;
            _denominator = denominator / g;
        }

        constexpr auto numerator() const -> std::int64_t { return _numerator; }
        constexpr auto denominator() const -> std::int64_t { return _denominator; }

        constexpr auto to_double() const -> double
        {
            return static_cast<double>(_numerator) / static_cast<double>(_denominator);
        }

        auto to_string() const -> std::string
        {
            if (_denominator == 1)
                return std::to_string(_numerator);
            return std::to_string(_numerator) + "/" + std::to_string(_denominator);
        }

        friend constexpr auto operator+(const Rational & a, const Rational & b) -> Rational
        {
            return Rational(a._numerator * b._denominator + b._numerator * a._denominator, a._denominator * b._denominator);
        }

        friend constexpr auto operator/(const Rational & a, const Rational & b) -> Rational
        {
            return Rational(a._numerator * b._denominator, a._denominator * b._numerator);
        }

        friend constexpr auto operator==(const Rational &, const Rational &) -> bool = default;

        friend constexpr auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
        {
            return static_cast<__int128>(a._numerator) * b._denominator <=> static_cast<__int128>(b._numerator) * a._denominator;
        }

    private:
        std::int64_t _numerator = 0;
        std::int64_t _denominator = 1;
    };
}
