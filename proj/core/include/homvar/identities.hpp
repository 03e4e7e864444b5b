#pragma once

#include "homvar/multiindex.hpp"
#include "homvar/rational.hpp"

#include <string>

namespace homvar {

// Exact comparison record: a brute-force evaluation against a closed form.
struct IdentityReport {
    std::string name;
    std::string parameters;
    Rational brute;
    Rational closed;
    bool pass;
};

inline IdentityReport make_report(std::string name, std::string parameters,
                                  Rational brute, Rational closed) {
    bool pass = brute == closed;
    return {std::move(name), std::move(parameters), std::move(brute),
            std::move(closed), pass};
}

// Coefficient of the Hilbert-form derivative expansion; requires |I| >= 1.
Rational coeff_C(const MultiIndex& I, const MultiIndex& M, int i, int j);

// F_{a,b} = (a! b! + (-1)^a (a+b)!) / (a+b+1)!
Rational coeff_F(int a, int b);

// G_{a,q} = a! / (q! (a-q)!), requires 0 <= q <= a.
Rational coeff_G(int a, int q);

// lambda_p = (-1)^p p! / (2^{p+1} (p+2)!)
Rational coeff_lambda(int p);

// sum_j C_{K+1_i,M,j,j} - sum_j C_{K+1_j,M,j,i}  ==  (m-1) F_{|K|,|M|};
// the closed form depends on K and M through their lengths only.
IdentityReport coeff_C_difference_check(const MultiIndex& K,
                                        const MultiIndex& M, int i, int m);

// The triple sum collapsing to the recovery coefficient, its closed form,
// and its two summands.
Rational recovery_H_brute(int q);
Rational recovery_H_closed(int q);
Rational recovery_A_brute(int q);
Rational recovery_B_brute(int q);

// sum_{p=0}^{r} p!/(p+2)!  ==  (r+1)/(r+2)
IdentityReport partial_fraction_sum(int r);

// sum_{s=0}^{p-r} 1/((p-r-s)! s!)  ==  2^{p-r}/(p-r)!, requires 0 <= r <= p.
IdentityReport binomial_sum(int p, int r);

// sum_{p=0}^{q-r} (-1)^p (p+r)! / ((p+r+2)! p! (q-r-p)!)
//   ==  (q-r+1) r! / (q+2)!, requires 0 <= r <= q.
IdentityReport beta_sum(int q, int r);

// Builds (1+x)^{q-p} + (-1)^{p-s} (1+x)^{q-s+1}, divides exactly by (2+x)
// (throws NonDivisible on a remainder), reads off the coefficient of
// x^{q-p}, and compares with the displayed sum
// sum_{r=0}^{p-s} (-1)^r 2^{p-r-s} (q+1-s)! / ((q+1-r-s)! r!).
// Requires 0 <= s <= p <= q.
IdentityReport b_coefficient_check(int q, int p, int s);

}  // namespace homvar
