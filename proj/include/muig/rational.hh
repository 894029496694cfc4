#ifndef MUIG_RATIONAL_HH
#define MUIG_RATIONAL_HH

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace muig
{
    /// Exact rational number, always kept in lowest terms.
    class Rational
    {
        public:
            Rational() = default;
            Rational(long value) : _value(value) {} // NOLINT(google-explicit-constructor)
            Rational(long numerator, long denominator);

            /// Accepts "p" or "p/q" with optional leading minus; no decimals.
            static auto parse(std::string_view text) -> Rational;

            /// Canonical "p" or "p/q" form.
            [[nodiscard]] auto str() const -> std::string;

            friend auto operator+(const Rational & a, const Rational & b) -> Rational { return Rational{mpq_class(a._value + b._value)}; }
            friend auto operator-(const Rational & a, const Rational & b) -> Rational { return Rational{mpq_class(a._value - b._value)}; }
            friend auto operator*(const Rational & a, const Rational & b) -> Rational { return Rational{mpq_class(a._value * b._value)}; }
            friend auto operator/(const Rational & a, const Rational & b) -> Rational;
            auto operator-() const -> Rational { return Rational{mpq_class(-_value)}; }

            auto operator+=(const Rational & other) -> Rational & { _value += other._value; return *this; }
            auto operator-=(const Rational & other) -> Rational & { _value -= other._value; return *this; }

            friend auto operator==(const Rational & a, const Rational & b) -> bool { return cmp(a._value, b._value) == 0; }
            friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
            {
                auto c = cmp(a._value, b._value);
                return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
            }

            friend auto operator<<(std::ostream & s, const Rational & r) -> std::ostream & { return s << r.str(); }

        private:
            explicit Rational(mpq_class value) : _value(std::move(value)) {}

            mpq_class _value;
    };

    auto abs(const Rational & r) -> Rational;
}

#endif
