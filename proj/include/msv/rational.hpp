#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace msv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders r as a plain decimal string with a fixed number of fractional
// digits, rounding half away from zero. Used for CSV output where exact
// values must print deterministically.
inline std::string to_decimal_string(const Rational& r, int digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = neg && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

// Accepts "3", "-2" or "1/2".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return Rational(num, den);
}

}  // namespace msv
