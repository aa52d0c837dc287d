#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "reasonkit/errors.hpp"

namespace reasonkit {

// Counts can exceed 2^64 by a wide margin, so both stay exact.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigCount pow2(std::size_t exponent) {
    return BigCount(1) << exponent;
}

// Accepts only "p/q" or "p" integer literals; decimals are rejected so that
// comparisons against exact precisions stay bit-exact.
inline Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& part) -> BigCount {
        if (part.empty()) throw ParseError("empty rational component in '" + text + "'");
        std::size_t start = part[0] == '-' ? 1 : 0;
        if (start == part.size()) throw ParseError("bad rational literal '" + text + "'");
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("bad rational literal '" + text + "' (decimals are not accepted; write p/q)");
        return BigCount(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigCount num = parse_int(text.substr(0, slash));
    BigCount den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

} // namespace reasonkit
