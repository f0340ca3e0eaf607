#pragma once

#include "hypell/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hypell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Floor of an exact rational, rounding toward negative infinity.
inline Integer floor(const Rational& q)
{
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;
    if (n % d != 0 && n < 0)
        --quot;
    return quot;
}

/// Least s >= 0 with s*s >= n.
inline Integer ceil_sqrt(const Integer& n)
{
    if (n <= 0)
        return 0;
    Integer s = boost::multiprecision::sqrt(n);
    if (s * s < n)
        ++s;
    return s;
}

/// Least k >= 0 with 2k^2 >= r, i.e. the ceiling of sqrt(r/2).
inline Integer ceil_sqrt_half(const Integer& r)
{
    if (r <= 0)
        return 0;
    // k^2 >= r/2  <=>  k^2 >= ceil(r/2) for integral k
    return ceil_sqrt((r + 1) / 2);
}

inline Integer gcd(const Integer& x, const Integer& y)
{
    return boost::multiprecision::gcd(x, y);
}

/// "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& n) { return n.str(); }

inline Integer parse_integer(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw Error(ErrorCode::InvalidInput, "empty integer token");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        throw Error(ErrorCode::InvalidInput, "malformed integer token '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw Error(ErrorCode::InvalidInput, "malformed integer token '" + s + "'");
    }
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s);
}

inline Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

} // namespace hypell
