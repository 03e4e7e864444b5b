#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace homvar {

// Exact scalar arithmetic. Backed by Boost.Multiprecision: cpp_int is an
// unbounded integer, cpp_rational keeps gcd(|num|, den) = 1 and den > 0 as
// class invariants, which is exactly the canonical form required here.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt int_pow2(int n) {
    BigInt r = 1;
    r <<= n;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Rational rational_of(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace homvar
