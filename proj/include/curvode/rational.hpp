#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvode {

// Exact arbitrary-precision arithmetic. Every coefficient in the system is a
// Rational; no floating point appears anywhere. cpp_rational keeps values in
// lowest terms with a positive denominator at all times.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

// Serializes as "p/q" even for integers ("5" -> "5/1"), matching the wire
// format used by all JSON payloads.
inline std::string to_fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(s)));
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + std::string(s));
    }
}

}  // namespace curvode
