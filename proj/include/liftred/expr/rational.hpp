#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "liftred/errors.hpp"

namespace liftred {

/// Exact rational number. GMP keeps it canonical: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return r;
}

/// Prints `a` or `a/b`.
inline std::string to_string(const Rational &r) { return r.get_str(10); }

/// Accepts `[-]a` or `[-]a/b` with decimal digits only.
inline Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    const auto slash = text.find('/');
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = text.substr(i, slash == std::string_view::npos ? std::string_view::npos : slash - i);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw SyntaxError("malformed rational '" + std::string(text) + "'", 0);
    const mpz_class n{std::string(num)};
    const mpz_class d{slash == std::string_view::npos ? std::string("1") : std::string(den)};
    if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'", slash);
    Rational r(n, d);
    r.canonicalize();
    if (!text.empty() && text[0] == '-') r = -r;
    return r;
}

inline double to_double(const Rational &r) { return r.get_d(); }

} // namespace liftred
