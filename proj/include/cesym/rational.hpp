#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cesym/errors.hpp"

namespace cesym {

// All arithmetic in the library is exact. Rationals are kept in lowest terms
// with positive denominator by the underlying representation; zero is 0/1.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vector   = std::vector<Rational>;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

/// num/den in lowest terms with positive denominator. The backend's own
/// (num, den) constructor refuses negative denominators, so the sign is
/// moved onto the numerator here.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Parses "p", "-p" or "p/q" with decimal integers p, q (either may carry a
/// sign; the result is normalized). Rejects anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw ParseError("bad rational literal '" + std::string(text) +
                         "' (expected integer or p/q)");
    };
    if (text.empty()) fail();

    auto parse_int = [&](std::string_view s) -> Integer {
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') i = 1;
        if (i == s.size()) fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') fail();
        // the backend accepts a leading '-' but not '+', so apply signs here
        Integer v{std::string(s.substr(i))};
        return s[0] == '-' ? Integer(-v) : v;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));

    if (slash == 0 || slash + 1 == text.size()) fail();
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("bad rational literal '" + std::string(text) +
                                   "': zero denominator");
    return make_rational(std::move(num), std::move(den));
}

/// "p" when the denominator is 1, otherwise "p/q".
inline std::string format_rational(const Rational& r) {
    std::string s = rational_num(r).str();
    if (rational_den(r) != 1) s += "/" + rational_den(r).str();
    return s;
}

} // namespace cesym
