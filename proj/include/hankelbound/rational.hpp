#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hankelbound {

// Exact arbitrary-precision rational. All symbolic-layer arithmetic runs on
// this type; floats appear only in the interval/search layers.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

// Serialized form is "p" or "p/q" with q > 0.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
}

// Exact double -> rational conversion (every finite double is rational).
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value is not rational");
    return Rational(x);
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace hankelbound
