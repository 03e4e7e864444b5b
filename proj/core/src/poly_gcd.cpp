#include "homvar/symbolic.hpp"

#include <algorithm>
#include <map>

namespace homvar {

namespace {

BigInt bigint_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt bigint_lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / bigint_gcd(a, b) * b;
}

// View of a polynomial as univariate in `v` with Poly coefficients.
std::map<int, Poly> split_by(const Poly& p, const JetVar& v) {
    std::map<int, Poly> out;
    for (const auto& [mono, coeff] : p.terms()) {
        int e = mono.exponent_of(v);
        Monomial rest = *mono.divided_by(Monomial::variable(v, e));
        out[e].add_term(rest, coeff);
    }
    return out;
}

int degree_in(const std::map<int, Poly>& u) {
    return u.empty() ? -1 : u.rbegin()->first;
}

Poly join(const std::map<int, Poly>& u, const JetVar& v) {
    Poly r;
    for (const auto& [e, coeff] : u) {
        Poly ve = Poly::variable(v).pow(e);
        r = r + coeff * ve;
    }
    return r;
}

std::map<int, Poly> mul_uni(const std::map<int, Poly>& a, const Poly& s) {
    std::map<int, Poly> r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a) {
        Poly p = c * s;
        if (!p.is_zero()) r[e] = std::move(p);
    }
    return r;
}

std::map<int, Poly> sub_uni(std::map<int, Poly> a, const std::map<int, Poly>& b) {
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        if (it == a.end()) {
            a.emplace(e, -c);
        } else {
            it->second = it->second - c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

// Pseudo-remainder of a by b in the main variable (b nonzero, deg a >= deg b
// not required). Multiplies by powers of lc(b) as needed, which is harmless
// since callers strip contents afterwards.
std::map<int, Poly> pseudo_rem(std::map<int, Poly> r, const std::map<int, Poly>& b) {
    int db = degree_in(b);
    const Poly& lcb = b.rbegin()->second;
    while (!r.empty() && degree_in(r) >= db) {
        int dr = degree_in(r);
        Poly lcr = r.rbegin()->second;
        // r := lcb * r - lcr * x^(dr-db) * b
        std::map<int, Poly> shifted;
        for (const auto& [e, c] : b) shifted[e + dr - db] = c * lcr;
        r = sub_uni(mul_uni(r, lcb), shifted);
    }
    return r;
}

JetVar main_variable(const Poly& a, const Poly& b) {
    std::set<JetVar> vars;
    a.collect_variables(vars);
    b.collect_variables(vars);
    return *vars.rbegin();
}

// Content of p with respect to the main variable: gcd of its coefficient
// polynomials in the remaining variables.
Poly content_wrt(const std::map<int, Poly>& u) {
    Poly g = Poly::zero();
    for (const auto& [e, c] : u) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly make_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    return p.times_scalar(1 / rational_content(p));
}

}  // namespace

Rational rational_content(const Poly& p) {
    if (p.is_zero()) return Rational(1);
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = bigint_gcd(num_gcd, boost::multiprecision::numerator(c));
        den_lcm = bigint_lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    Rational content(num_gcd, den_lcm);
    if (p.leading_coefficient() < 0) content = -content;
    return content;
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    Poly rem = num;
    Poly quot;
    const Monomial den_lm = den.leading_monomial();
    const Rational den_lc = den.leading_coefficient();
    while (!rem.is_zero()) {
        auto m = rem.leading_monomial().divided_by(den_lm);
        if (!m) return std::nullopt;
        Rational c = rem.leading_coefficient() / den_lc;
        Poly t;
        t.add_term(*m, c);
        quot = quot + t;
        rem = rem - t * den;
    }
    return quot;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(1);

    JetVar v = main_variable(a, b);
    auto ua = split_by(a, v);
    auto ub = split_by(b, v);

    Poly cont_a = content_wrt(ua);
    Poly cont_b = content_wrt(ub);
    Poly cont_gcd = poly_gcd(cont_a, cont_b);

    auto prim = [&](const std::map<int, Poly>& u, const Poly& cont) {
        std::map<int, Poly> r;
        for (const auto& [e, c] : u) r[e] = *exact_divide(c, cont);
        return r;
    };
    auto A = prim(ua, cont_a);
    auto B = prim(ub, cont_b);
    if (degree_in(A) < degree_in(B)) std::swap(A, B);

    while (!B.empty()) {
        auto R = pseudo_rem(A, B);
        A = std::move(B);
        if (R.empty()) {
            B.clear();
        } else {
            Poly joined = join(R, v);
            Poly c = content_wrt(split_by(joined, v));
            joined = *exact_divide(joined, c);
            B = split_by(make_primitive(joined), v);
        }
    }

    Poly g = cont_gcd * join(A, v);
    return make_primitive(g);
}

}  // namespace homvar
