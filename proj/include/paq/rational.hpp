#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "paq/errors.hpp"

namespace paq {

// Exact rational arithmetic over arbitrary-precision integers. The backend
// keeps values canonical: reduced by gcd, denominator positive, zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// Parses "a" or "a/b" with optional leading '-'. Rejects everything else.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](Int& out) {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw Error("bad rational literal '" + text + "'");
        out = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
    };
    Int num, den = 1;
    read_digits(num);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        read_digits(den);
        if (den == 0) throw Error("zero denominator in '" + text + "'");
    }
    if (pos != text.size()) throw Error("bad rational literal '" + text + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace paq
