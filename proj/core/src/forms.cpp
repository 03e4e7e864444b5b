#include "homvar/forms.hpp"

#include "homvar/parse.hpp"

#include <algorithm>
#include <sstream>

namespace homvar {

namespace {

// Sorts a covector tuple, counting swaps; nullopt when a factor repeats.
std::optional<std::pair<ScalarForm::Tuple, int>> canonical_tuple(
    ScalarForm::Tuple t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i) {
        size_t j = i;
        while (j > 0 && t[j] < t[j - 1]) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return std::nullopt;
    return std::make_pair(std::move(t), sign);
}

ScalarForm::Tuple erase_at(const ScalarForm::Tuple& t, size_t pos) {
    ScalarForm::Tuple r;
    r.reserve(t.size() - 1);
    for (size_t i = 0; i < t.size(); ++i)
        if (i != pos) r.push_back(t[i]);
    return r;
}

ScalarForm::Tuple replace_at(const ScalarForm::Tuple& t, size_t pos,
                             const Covector& c) {
    ScalarForm::Tuple r = t;
    r[pos] = c;
    return r;
}

// Total-derivative derivation on a coefficient: sum over the jet coordinates
// present of u^alpha_{I+1_j} times the partial derivative.
RatExpr total_derivative_expr(int j, const RatExpr& e) {
    RatExpr r = RatExpr::zero();
    for (const JetVar& v : e.variables()) {
        RatExpr p = e.partial(v);
        if (p.is_zero()) continue;
        r = r + p * RatExpr::variable(JetVar(v.alpha, v.index.incremented(j)));
    }
    return r;
}

// Delta^I_j as a derivation on a coefficient: only coordinates u^alpha_M with
// M >= I contribute, with the falling-factorial multiplicity M!/(M-I)!.
RatExpr delta_derivative_expr(const MultiIndex& I, int j, const RatExpr& e) {
    RatExpr r = RatExpr::zero();
    for (const JetVar& v : e.variables()) {
        auto lowered = v.index.try_minus(I);
        if (!lowered) continue;
        RatExpr p = e.partial(v);
        if (p.is_zero()) continue;
        Rational w(falling_weight(v.index, I));
        r = r + p.times_scalar(w) *
                    RatExpr::variable(JetVar(v.alpha, lowered->incremented(j)));
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// ScalarForm

void ScalarForm::add_term(Tuple tuple, const RatExpr& coeff) {
    if (coeff.is_zero()) return;
    auto canon = canonical_tuple(std::move(tuple));
    if (!canon) return;
    auto& [key, sign] = *canon;
    RatExpr c = sign == 1 ? coeff : -coeff;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatExpr ScalarForm::coefficient(const Tuple& tuple) const {
    auto canon = canonical_tuple(tuple);
    if (!canon) return RatExpr::zero();
    auto it = terms_.find(canon->first);
    if (it == terms_.end()) return RatExpr::zero();
    return canon->second == 1 ? it->second : -it->second;
}

RatExpr ScalarForm::scalar() const { return coefficient({}); }

ScalarForm ScalarForm::operator+(const ScalarForm& o) const {
    ScalarForm r = *this;
    if (r.is_zero()) r.degree_ = o.degree_;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

ScalarForm ScalarForm::operator-(const ScalarForm& o) const {
    return *this + (-o);
}

ScalarForm ScalarForm::operator-() const {
    ScalarForm r(degree_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

ScalarForm ScalarForm::times(const RatExpr& c) const {
    ScalarForm r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) {
        RatExpr p = k * c;
        if (!p.is_zero()) r.terms_.emplace(t, std::move(p));
    }
    return r;
}

ScalarForm ScalarForm::times_scalar(const Rational& c) const {
    ScalarForm r(degree_);
    if (c == 0) return r;
    for (const auto& [t, k] : terms_) r.terms_.emplace(t, k.times_scalar(c));
    return r;
}

bool ScalarForm::operator==(const ScalarForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && terms_ == o.terms_;
}

int ScalarForm::max_order() const {
    int k = 0;
    for (const auto& [t, c] : terms_) {
        k = std::max(k, c.max_order());
        for (const Covector& cv : t) k = std::max(k, cv.order());
    }
    return k;
}

std::string ScalarForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << print_expr(c) << ")";
        for (const Covector& cv : t) os << " ^ " << cv.to_string();
    }
    return os.str();
}

std::string VectorField::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << print_expr(c) << ") d/d" << v.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Exterior algebra

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b) {
    ScalarForm r(a.degree() + b.degree());
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            RatExpr c = ca * cb;
            if (c.is_zero()) continue;
            ScalarForm::Tuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            r.add_term(std::move(t), c);
        }
    }
    return r;
}

ScalarForm exterior_d(const ScalarForm& w) {
    ScalarForm r(w.degree() + 1);
    for (const auto& [t, c] : w.terms()) {
        for (const JetVar& v : c.variables()) {
            RatExpr p = c.partial(v);
            if (p.is_zero()) continue;
            ScalarForm::Tuple nt;
            nt.reserve(t.size() + 1);
            nt.push_back(Covector(v.alpha, v.index));
            nt.insert(nt.end(), t.begin(), t.end());
            r.add_term(std::move(nt), p);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Total derivatives

VectorField total_derivative_field(int m, int n, int j, int order_cap) {
    VectorField X;
    for (int p = 0; p <= order_cap; ++p) {
        for (const MultiIndex& I : enumerate_multiindices(m, p)) {
            for (int alpha = 1; alpha <= n; ++alpha) {
                X.set_component(JetVar(alpha, I),
                                RatExpr::variable(JetVar(alpha, I.incremented(j))));
            }
        }
    }
    return X;
}

ScalarForm contract(const ScalarForm& w, const VectorField& X) {
    if (w.degree() == 0)
        throw ContractDegreeZero("interior product of a 0-form");
    ScalarForm r(w.degree() - 1);
    for (const auto& [t, c] : w.terms()) {
        for (size_t a = 0; a < t.size(); ++a) {
            RatExpr comp = X.component(JetVar(t[a].alpha, t[a].index));
            if (comp.is_zero()) continue;
            RatExpr coeff = c * comp;
            if (a % 2 == 1) coeff = -coeff;
            r.add_term(erase_at(t, a), coeff);
        }
    }
    return r;
}

ScalarForm contract_total(int j, const ScalarForm& w) {
    if (w.degree() == 0)
        throw ContractDegreeZero("interior product of a 0-form");
    ScalarForm r(w.degree() - 1);
    for (const auto& [t, c] : w.terms()) {
        for (size_t a = 0; a < t.size(); ++a) {
            RatExpr pair =
                RatExpr::variable(JetVar(t[a].alpha, t[a].index.incremented(j)));
            RatExpr coeff = c * pair;
            if (a % 2 == 1) coeff = -coeff;
            r.add_term(erase_at(t, a), coeff);
        }
    }
    return r;
}

ScalarForm lie_total(int j, const ScalarForm& w) {
    ScalarForm r(w.degree());
    for (const auto& [t, c] : w.terms()) {
        r.add_term(t, total_derivative_expr(j, c));
        for (size_t a = 0; a < t.size(); ++a) {
            Covector raised(t[a].alpha, t[a].index.incremented(j));
            r.add_term(replace_at(t, a, raised), c);
        }
    }
    return r;
}

ScalarForm lie_multi(const MultiIndex& I, const ScalarForm& w) {
    ScalarForm r = w;
    for (int slot = 1; slot <= I.dim(); ++slot)
        for (int rep = 0; rep < I.at(slot); ++rep) r = lie_total(slot, r);
    return r;
}

// ---------------------------------------------------------------------------
// Vertical endomorphisms

ScalarForm vertical(int i, const ScalarForm& w) {
    ScalarForm r(w.degree());
    for (const auto& [t, c] : w.terms()) {
        for (size_t a = 0; a < t.size(); ++a) {
            int mult = t[a].index.at(i);
            if (mult == 0) continue;
            MultiIndex lowered = t[a].index.minus(MultiIndex::unit(t[a].index.dim(), i));
            r.add_term(replace_at(t, a, Covector(t[a].alpha, lowered)),
                       c.times_scalar(Rational(mult)));
        }
    }
    return r;
}

ScalarForm vertical_iter(const MultiIndex& I, const ScalarForm& w) {
    ScalarForm r = w;
    for (int slot = 1; slot <= I.dim(); ++slot)
        for (int rep = 0; rep < I.at(slot); ++rep) r = vertical(slot, r);
    return r;
}

ScalarForm vertical_composite(const MultiIndex& I, const ScalarForm& w) {
    if (I.is_zero()) return w;
    ScalarForm r(w.degree());
    for (const auto& [t, c] : w.terms()) {
        for (size_t a = 0; a < t.size(); ++a) {
            auto lowered = t[a].index.try_minus(I);
            if (!lowered) continue;
            Rational weight(falling_weight(t[a].index, I));
            r.add_term(replace_at(t, a, Covector(t[a].alpha, *lowered)),
                       c.times_scalar(weight));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fundamental vector fields

VectorField delta_field(const MultiIndex& I, int j, int n, int order_cap) {
    VectorField X;
    int m = I.dim();
    for (int p = 0; p <= order_cap; ++p) {
        for (const MultiIndex& K : enumerate_multiindices(m, p)) {
            MultiIndex target = K.plus(I);
            Rational weight(falling_weight(target, I));
            for (int alpha = 1; alpha <= n; ++alpha) {
                X.set_component(
                    JetVar(alpha, target),
                    RatExpr::variable(JetVar(alpha, K.incremented(j)))
                        .times_scalar(weight));
            }
        }
    }
    return X;
}

ScalarForm contract_delta(const MultiIndex& I, int j, const ScalarForm& w) {
    if (w.degree() == 0)
        throw ContractDegreeZero("interior product of a 0-form");
    if (I.is_zero()) return contract_total(j, w);
    ScalarForm r(w.degree() - 1);
    for (const auto& [t, c] : w.terms()) {
        for (size_t a = 0; a < t.size(); ++a) {
            auto lowered = t[a].index.try_minus(I);
            if (!lowered) continue;
            Rational weight(falling_weight(t[a].index, I));
            RatExpr coeff =
                c * RatExpr::variable(JetVar(t[a].alpha, lowered->incremented(j)))
                        .times_scalar(weight);
            if (a % 2 == 1) coeff = -coeff;
            r.add_term(erase_at(t, a), coeff);
        }
    }
    return r;
}

ScalarForm lie_delta(const MultiIndex& I, int j, const ScalarForm& w) {
    if (I.is_zero()) return lie_total(j, w);
    ScalarForm r(w.degree());
    for (const auto& [t, c] : w.terms()) {
        r.add_term(t, delta_derivative_expr(I, j, c));
        for (size_t a = 0; a < t.size(); ++a) {
            auto lowered = t[a].index.try_minus(I);
            if (!lowered) continue;
            Rational weight(falling_weight(t[a].index, I));
            r.add_term(replace_at(t, a,
                                  Covector(t[a].alpha, lowered->incremented(j))),
                       c.times_scalar(weight));
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Mixed sums

ScalarForm lie_vertical_sum(int p, int m, const ScalarForm& w) {
    if (p == 0) return w;
    ScalarForm r(w.degree());
    for (const MultiIndex& I : enumerate_multiindices(m, p)) {
        ScalarForm s = vertical_iter(I, w);
        if (s.is_zero()) continue;
        s = lie_multi(I, s);
        r = r + s.times_scalar(Rational(1, I.factorial()));
    }
    return r;
}

}  // namespace homvar
