#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace ecost {

/// Exact rational used for evaluation values, weights and normalized costs.
using Rational = boost::rational<std::int64_t>;

/// Arbitrary precision integer for search-space size bounds.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Parses "7", "-3", "5/2" or a finite decimal such as "0.25".
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) fail();
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s), &pos);
        } catch (const std::exception&) {
            fail();
        }
        if (pos != s.size()) fail();
        return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto den = parse_int(text.substr(slash + 1));
        if (den == 0) fail();
        return Rational(parse_int(text.substr(0, slash)), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12) fail();
        for (char c : frac)
            if (c < '0' || c > '9') fail();
        bool negative = !whole.empty() && whole.front() == '-';
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_int(whole);
        std::int64_t f = parse_int(frac);
        Rational mag = Rational(negative ? -w : w) + Rational(f, scale);
        return negative ? -mag : mag;
    }
    return Rational(parse_int(text));
}

inline std::int64_t floor(const Rational& r) {
    auto q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

/// Nearest integer, ties to the even neighbour.
inline std::int64_t round_half_even(const Rational& r) {
    std::int64_t lo = floor(r);
    Rational rem = r - Rational(lo);
    if (rem < Rational(1, 2)) return lo;
    if (rem > Rational(1, 2)) return lo + 1;
    return (lo % 2 == 0) ? lo : lo + 1;
}

inline BigInt big_pow(const BigInt& base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

}  // namespace ecost
