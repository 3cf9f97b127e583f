#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symmult {

// n! overflows 64 bits at n = 21, so every count/dimension is a cpp_int
// and every probability is a cpp_rational.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Nearest integer to a rational, halves rounding up.
inline BigInt round_rational(const Rational& x) {
    BigInt num = numerator(x) * 2 + denominator(x);
    BigInt den = denominator(x) * 2;
    BigInt q = num / den;
    if (num < 0 && num % den != 0) q -= 1; // floor for negatives
    return q;
}

inline double to_double(const Rational& x) {
    return static_cast<double>(x);
}

} // namespace symmult
