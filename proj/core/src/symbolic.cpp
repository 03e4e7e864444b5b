#include "homvar/symbolic.hpp"

#include <algorithm>

namespace homvar {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(const JetVar& v, int exp) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(const JetVar& v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    for (const auto& [v, e] : o.factors_) {
        while (a != factors_.end() && a->first < v) r.factors_.push_back(*a++);
        if (a == factors_.end() || !(a->first == v) || a->second < e)
            return std::nullopt;
        if (a->second > e) r.factors_.emplace_back(a->first, a->second - e);
        ++a;
    }
    while (a != factors_.end()) r.factors_.push_back(*a++);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    return divided_by(o).has_value();
}

bool Monomial::operator<(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) return false;  // we carry the earlier variable
        if (b->first < a->first) return true;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return a == factors_.end() && b != o.factors_.end();
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Monomial(), c);
    return p;
}

Poly Poly::variable(const JetVar& v) {
    Poly p;
    p.terms_.emplace(Monomial::variable(v), Rational(1));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational Poly::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

Monomial Poly::leading_monomial() const {
    if (terms_.empty()) return Monomial();
    return terms_.rbegin()->first;
}

void Poly::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::times_scalar(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    Poly r = Poly::constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Poly Poly::derivative(const JetVar& v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(v);
        if (e == 0) continue;
        auto lowered = m.divided_by(Monomial::variable(v));
        r.add_term(*lowered, c * e);
    }
    return r;
}

int Poly::max_order() const {
    int k = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) k = std::max(k, v.order());
    return k;
}

void Poly::collect_variables(std::set<JetVar>& out) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) out.insert(v);
}

// ---------------------------------------------------------------------------
// RatExpr

RatExpr::RatExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational expression with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *exact_divide(num_, g);
        den_ = *exact_divide(den_, g);
    }
    Rational c = rational_content(den_);
    num_ = num_.times_scalar(1 / c);
    den_ = den_.times_scalar(1 / c);
}

RatExpr RatExpr::operator+(const RatExpr& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatExpr(num_ + o.num_, den_);
    return RatExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const { return *this + (-o); }

RatExpr RatExpr::operator-() const {
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RatExpr RatExpr::operator*(const RatExpr& o) const {
    if (is_zero() || o.is_zero()) return RatExpr::zero();
    // Cancel across the two fractions first; the result is then already in
    // lowest terms, so the constructor's gcd is cheap.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : *exact_divide(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : *exact_divide(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : *exact_divide(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : *exact_divide(den_, g2);
    return RatExpr(n1 * n2, d1 * d2);
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero expression");
    RatExpr inv(o.den_, o.num_);
    return *this * inv;
}

RatExpr RatExpr::times_scalar(const Rational& c) const {
    if (c == 0) return RatExpr::zero();
    RatExpr r = *this;
    r.num_ = r.num_.times_scalar(c);
    return r;
}

RatExpr RatExpr::pow(int e) const {
    if (e < 0) return RatExpr::from_int(1) / pow(-e);
    RatExpr r = RatExpr::from_int(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

bool RatExpr::operator==(const RatExpr& o) const {
    // Exact decision independent of gcd completeness: cross-multiply.
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RatExpr RatExpr::partial(const JetVar& v) const {
    Poly dn = num_.derivative(v);
    Poly dd = den_.derivative(v);
    if (dd.is_zero()) return RatExpr(dn, den_);
    return RatExpr(dn * den_ - num_ * dd, den_ * den_);
}

int RatExpr::max_order() const {
    return std::max(num_.max_order(), den_.max_order());
}

std::set<JetVar> RatExpr::variables() const {
    std::set<JetVar> s;
    num_.collect_variables(s);
    den_.collect_variables(s);
    return s;
}

}  // namespace homvar
