#include <muig/rational.hh>

#include <cctype>
#include <stdexcept>

using std::string;
using std::string_view;

namespace muig
{
    Rational::Rational(long numerator, long denominator)
    {
        if (0 == denominator)
            throw std::domain_error("rational with zero denominator");
        _value = mpq_class(numerator, denominator);
        _value.canonicalize();
    }

    auto Rational::parse(string_view text) -> Rational
    {
        auto digits = [] (string_view part, bool allow_sign) {
            if (part.empty())
                return false;
            std::size_t start = 0;
            if (allow_sign && part[0] == '-')
                start = 1;
            if (start == part.size())
                return false;
            for (auto i = start; i < part.size(); ++i)
                if (! std::isdigit(static_cast<unsigned char>(part[i])))
                    return false;
            return true;
        };

        auto slash = text.find('/');
        string_view num = text.substr(0, slash);
        string_view den = slash == string_view::npos ? string_view{"1"} : text.substr(slash + 1);
        if (! digits(num, true) || ! digits(den, false))
            throw std::invalid_argument("not an exact rational: '" + string(text) + "'");

        mpq_class value;
        value.get_num() = mpz_class(string(num));
        value.get_den() = mpz_class(string(den));
        if (0 == value.get_den())
            throw std::invalid_argument("zero denominator in '" + string(text) + "'");
        value.canonicalize();
        return Rational{value};
    }

    auto Rational::str() const -> string
    {
        return _value.get_str();
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (0 == sgn(b._value))
            throw std::domain_error("division by zero");
        return Rational{mpq_class(a._value / b._value)};
    }

    auto abs(const Rational & r) -> Rational
    {
        return r < Rational{0} ? -r : r;
    }
}
