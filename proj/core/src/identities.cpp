#include "homvar/identities.hpp"

#include "homvar/errors.hpp"

#include <vector>

namespace homvar {

namespace {

Rational neg1_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::string mi_pair(const MultiIndex& a, const MultiIndex& b) {
    return a.to_string() + "," + b.to_string();
}

}  // namespace

Rational coeff_C(const MultiIndex& I, const MultiIndex& M, int i, int j) {
    const int li = I.length();
    const int lm = M.length();
    const BigInt denom = int_factorial(li + lm + 1);
    const Rational sgn = neg1_pow(li);

    Rational first(int_factorial(li) * int_factorial(lm), denom);
    first += sgn * Rational(int_factorial(li + lm - 1), denom);

    Rational second(int_factorial(li - 1) * int_factorial(lm + 1), denom);
    second -= sgn * Rational(int_factorial(li + lm - 1), denom);

    Rational third(int_factorial(li) * int_factorial(lm), denom);
    third -= sgn * Rational(int_factorial(li + lm), denom);

    Rational c = Rational(M.at(i)) * first - Rational(I.at(i)) * second;
    if (i == j) c += third;
    return c;
}

Rational coeff_F(int a, int b) {
    BigInt num = int_factorial(a) * int_factorial(b);
    BigInt alt = int_factorial(a + b);
    Rational r(num, int_factorial(a + b + 1));
    Rational s(alt, int_factorial(a + b + 1));
    if (a % 2 == 0) return Rational(r + s);
    return Rational(r - s);
}

Rational coeff_G(int a, int q) {
    return Rational(int_factorial(a), int_factorial(q) * int_factorial(a - q));
}

Rational coeff_lambda(int p) {
    Rational r(int_factorial(p), int_pow2(p + 1) * int_factorial(p + 2));
    return p % 2 == 0 ? r : -r;
}

IdentityReport coeff_C_difference_check(const MultiIndex& K,
                                        const MultiIndex& M, int i, int m) {
    Rational brute = 0;
    for (int j = 1; j <= m; ++j) {
        brute += coeff_C(K.incremented(i), M, j, j);
        brute -= coeff_C(K.incremented(j), M, j, i);
    }
    Rational closed = Rational(m - 1) * coeff_F(K.length(), M.length());
    return make_report("C-difference",
                       "K=" + K.to_string() + " M=" + M.to_string() +
                           " i=" + std::to_string(i) + " m=" + std::to_string(m),
                       brute, closed);
}

Rational recovery_A_brute(int q) {
    Rational acc = 0;
    for (int p = 0; p <= q; ++p) {
        for (int s = 0; s <= p; ++s) {
            for (int r = 0; r <= p - s; ++r) {
                BigInt num = int_factorial(p) * int_factorial(q) *
                             int_factorial(r + q - p);
                BigInt den = int_pow2(p + 1) * int_factorial(p + 2) *
                             int_factorial(r) * int_factorial(q - p) *
                             int_factorial(p - s - r) *
                             int_factorial(s + r + q - p + 1);
                acc += neg1_pow(q + r) * Rational(num, den);
            }
        }
    }
    return acc;
}

Rational recovery_B_brute(int q) {
    Rational acc = 0;
    for (int p = 0; p <= q; ++p) {
        for (int s = 0; s <= p; ++s) {
            for (int r = 0; r <= p - s; ++r) {
                BigInt num = int_factorial(p) * int_factorial(q) *
                             int_factorial(s + r + q - p);
                BigInt den = int_pow2(p + 1) * int_factorial(p + 2) *
                             int_factorial(r) * int_factorial(s) *
                             int_factorial(q - p) * int_factorial(p - s - r) *
                             int_factorial(s + r + q - p + 1);
                acc += neg1_pow(q + r + s) * Rational(num, den);
            }
        }
    }
    return acc;
}

Rational recovery_H_brute(int q) {
    Rational acc = 0;
    for (int p = 0; p <= q; ++p) {
        for (int s = 0; s <= p; ++s) {
            for (int r = 0; r <= p - s; ++r) {
                BigInt pre_num = int_factorial(p) * int_factorial(q);
                BigInt pre_den = int_pow2(p + 1) * int_factorial(r) *
                                 int_factorial(s) * int_factorial(p + 2) *
                                 int_factorial(q - p) * int_factorial(p - s - r);
                Rational pre = neg1_pow(r + q) * Rational(pre_num, pre_den);
                BigInt f_den = int_factorial(s + r + q - p + 1);
                Rational bracket(int_factorial(s) * int_factorial(r + q - p),
                                 f_den);
                bracket += neg1_pow(s) * Rational(int_factorial(s + r + q - p),
                                                  f_den);
                acc += pre * bracket;
            }
        }
    }
    return acc;
}

Rational recovery_H_closed(int q) {
    Rational first(BigInt(1), BigInt(2) * (q + 2));
    Rational second((int_pow2(q + 1) - 1) * int_factorial(q),
                    int_pow2(q + 1) * int_factorial(q + 2));
    return neg1_pow(q) * (first + second);
}

IdentityReport partial_fraction_sum(int r) {
    Rational brute = 0;
    for (int p = 0; p <= r; ++p)
        brute += Rational(int_factorial(p), int_factorial(p + 2));
    Rational closed(r + 1, r + 2);
    return make_report("partial-fraction", "r=" + std::to_string(r), brute,
                       closed);
}

IdentityReport binomial_sum(int p, int r) {
    Rational brute = 0;
    for (int s = 0; s <= p - r; ++s)
        brute += Rational(BigInt(1),
                          int_factorial(p - r - s) * int_factorial(s));
    Rational closed(int_pow2(p - r), int_factorial(p - r));
    return make_report("binomial",
                       "p=" + std::to_string(p) + " r=" + std::to_string(r),
                       brute, closed);
}

IdentityReport beta_sum(int q, int r) {
    Rational brute = 0;
    for (int p = 0; p <= q - r; ++p) {
        BigInt num = int_factorial(p + r);
        BigInt den = int_factorial(p + r + 2) * int_factorial(p) *
                     int_factorial(q - r - p);
        brute += neg1_pow(p) * Rational(num, den);
    }
    Rational closed(BigInt(q - r + 1) * int_factorial(r), int_factorial(q + 2));
    return make_report("beta",
                       "q=" + std::to_string(q) + " r=" + std::to_string(r),
                       brute, closed);
}

IdentityReport b_coefficient_check(int q, int p, int s) {
    // (1+x)^{q-p} + (-1)^{p-s} (1+x)^{q-s+1} as dense coefficients in x.
    int deg = q - s + 1;
    std::vector<Rational> poly(static_cast<size_t>(deg) + 1, Rational(0));
    for (int t = 0; t <= q - p; ++t)
        poly[static_cast<size_t>(t)] += Rational(binomial(q - p, t));
    Rational sign = neg1_pow(p - s);
    for (int t = 0; t <= q - s + 1; ++t)
        poly[static_cast<size_t>(t)] += sign * Rational(binomial(q - s + 1, t));

    // Exact division by (x+2): from the top coefficient down,
    // b_{deg-1} = a_deg and b_{t-1} = a_t - 2 b_t.
    std::vector<Rational> quotient(static_cast<size_t>(deg), Rational(0));
    quotient[static_cast<size_t>(deg - 1)] = poly[static_cast<size_t>(deg)];
    for (int t = deg - 1; t >= 1; --t)
        quotient[static_cast<size_t>(t - 1)] =
            poly[static_cast<size_t>(t)] - Rational(2) * quotient[static_cast<size_t>(t)];
    Rational remainder = poly[0] - Rational(2) * quotient[0];
    if (remainder != 0)
        throw NonDivisible("polynomial is not divisible by (2+x)");

    Rational brute = quotient[static_cast<size_t>(q - p)];

    Rational closed = 0;
    for (int r = 0; r <= p - s; ++r) {
        Rational term(int_pow2(p - r - s) * int_factorial(q + 1 - s),
                      int_factorial(q + 1 - r - s) * int_factorial(r));
        closed += neg1_pow(r) * term;
    }
    return make_report("b-coefficient",
                       "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                           " s=" + std::to_string(s),
                       brute, closed);
}

}  // namespace homvar
