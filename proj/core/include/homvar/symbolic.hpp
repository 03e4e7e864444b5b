#pragma once

#include "homvar/errors.hpp"
#include "homvar/multiindex.hpp"
#include "homvar/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homvar {

// A jet coordinate u^alpha_I: dependent-variable index alpha (1-based) and a
// derivative multi-index I over the m independent-variable slots.
//
// Variable order: first the multi-index in its canonical (graded) order, then
// alpha. This drives the monomial order and hence every canonical form.
struct JetVar {
    int alpha;
    MultiIndex index;

    JetVar(int a, MultiIndex i) : alpha(a), index(std::move(i)) {}

    int order() const { return index.length(); }

    bool operator==(const JetVar& o) const {
        return alpha == o.alpha && index == o.index;
    }
    bool operator<(const JetVar& o) const {
        if (!(index == o.index)) return index < o.index;
        return alpha < o.alpha;
    }

    std::string to_string() const {
        std::string s = "u[" + std::to_string(alpha) + ";";
        const auto& c = index.counts();
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + "]";
    }
};

// Power product of jet coordinates with positive integer exponents, held
// sorted by variable. Compared graded-lexicographically: total degree first,
// then the earliest variable with differing exponent decides (larger wins).
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(const JetVar& v, int exp = 1);

    int total_degree() const;
    bool is_unit() const { return factors_.empty(); }
    const std::vector<std::pair<JetVar, int>>& factors() const { return factors_; }

    int exponent_of(const JetVar& v) const;

    Monomial times(const Monomial& o) const;
    // Divides exactly or returns nullopt.
    std::optional<Monomial> divided_by(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator<(const Monomial& o) const;

private:
    std::vector<std::pair<JetVar, int>> factors_;  // sorted by JetVar, exps >= 1
};

// Multivariate polynomial over Q in jet coordinates, stored as a canonical
// map monomial -> nonzero coefficient.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly variable(const JetVar& v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Coefficient of the graded-lex greatest monomial (0 for the zero poly).
    Rational leading_coefficient() const;
    Monomial leading_monomial() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly times_scalar(const Rational& c) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly derivative(const JetVar& v) const;

    int max_order() const;
    void collect_variables(std::set<JetVar>& out) const;

    void add_term(const Monomial& mono, const Rational& coeff);

private:
    std::map<Monomial, Rational> terms_;
};

// Rational content (gcd of coefficient numerators over lcm of denominators),
// carrying the sign of the leading coefficient; dividing by it leaves a
// primitive integer polynomial with positive leading coefficient.
Rational rational_content(const Poly& p);

// Exact quotient, or nullopt if the division leaves a remainder.
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

// Multivariate polynomial gcd over Q.
//
// Method: recursive primitive pseudo-remainder sequences. The greatest jet
// variable present is taken as the main variable; contents (gcds of the
// coefficient polynomials in the remaining variables) are split off
// recursively and the primitive parts run through a Euclidean loop with
// pseudo-division, stripping contents at each step. The result is primitive
// with positive leading coefficient; the gcd of two nonzero constants is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact rational function num/den in canonical form: gcd(num, den) is a
// unit, den is a primitive integer polynomial with positive leading
// coefficient, and zero is represented as 0/1.
class RatExpr {
public:
    RatExpr() : num_(Poly::zero()), den_(Poly::constant(1)) {}
    RatExpr(Poly num, Poly den);  // normalizes; throws DivisionByZero

    static RatExpr zero() { return RatExpr(); }
    static RatExpr constant(const Rational& c) {
        return RatExpr(Poly::constant(c), Poly::constant(1));
    }
    static RatExpr from_int(long v) { return constant(Rational(v)); }
    static RatExpr variable(const JetVar& v) {
        return RatExpr(Poly::variable(v), Poly::constant(1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator-() const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const;  // throws DivisionByZero
    RatExpr times_scalar(const Rational& c) const;
    RatExpr pow(int e) const;  // e >= 0, or e < 0 with nonzero base

    bool operator==(const RatExpr& o) const;

    // Formal partial derivative with respect to one jet coordinate.
    RatExpr partial(const JetVar& v) const;

    // Highest |I| over the jet coordinates appearing in num or den.
    int max_order() const;
    std::set<JetVar> variables() const;

private:
    Poly num_;
    Poly den_;
};

inline bool equals(const RatExpr& a, const RatExpr& b) { return (a - b).is_zero(); }

}  // namespace homvar
