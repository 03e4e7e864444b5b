#pragma once

#include "homvar/symbolic.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homvar {

// Basis 1-form du^alpha_I. Canonical order: jet order |I| first, then alpha,
// then the multi-index; wedge tuples are kept strictly increasing in it.
struct Covector {
    int alpha;
    MultiIndex index;

    Covector(int a, MultiIndex i) : alpha(a), index(std::move(i)) {}

    int order() const { return index.length(); }

    bool operator==(const Covector& o) const {
        return alpha == o.alpha && index == o.index;
    }
    bool operator<(const Covector& o) const {
        int oa = order(), ob = o.order();
        if (oa != ob) return oa < ob;
        if (alpha != o.alpha) return alpha < o.alpha;
        return index < o.index;
    }

    std::string to_string() const {
        return "d(u[" + std::to_string(alpha) + ";" + [this] {
            std::string s;
            const auto& c = index.counts();
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c[i]);
            }
            return s;
        }() + "])";
    }
};

// Exterior r-form with RatExpr coefficients. Terms map a strictly increasing
// covector tuple of length r to a nonzero coefficient; a 0-form is a bare
// coefficient keyed by the empty tuple.
class ScalarForm {
public:
    using Tuple = std::vector<Covector>;

    explicit ScalarForm(int degree = 0) : degree_(degree) {}

    static ScalarForm from_expr(const RatExpr& e) {
        ScalarForm f(0);
        if (!e.is_zero()) f.terms_.emplace(Tuple{}, e);
        return f;
    }
    static ScalarForm zero(int degree) { return ScalarForm(degree); }

    // Adds coeff * (the wedge of `tuple` as given); reorders with sign and
    // drops repeated factors.
    void add_term(Tuple tuple, const RatExpr& coeff);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Tuple, RatExpr>& terms() const { return terms_; }

    RatExpr coefficient(const Tuple& tuple) const;
    // Degree-0 content (the zero expression for the zero form).
    RatExpr scalar() const;

    ScalarForm operator+(const ScalarForm& o) const;
    ScalarForm operator-(const ScalarForm& o) const;
    ScalarForm operator-() const;
    ScalarForm times(const RatExpr& c) const;
    ScalarForm times_scalar(const Rational& c) const;

    bool operator==(const ScalarForm& o) const;

    int max_order() const;

    std::string to_string() const;

private:
    int degree_;
    std::map<Tuple, RatExpr> terms_;
};

// Vector field sum X^alpha_I d/du^alpha_I with nonzero components only.
class VectorField {
public:
    void set_component(const JetVar& v, const RatExpr& coeff) {
        if (!coeff.is_zero()) comps_.insert_or_assign(v, coeff);
    }
    RatExpr component(const JetVar& v) const {
        auto it = comps_.find(v);
        return it == comps_.end() ? RatExpr::zero() : it->second;
    }
    const std::map<JetVar, RatExpr>& components() const { return comps_; }
    bool operator==(const VectorField& o) const { return comps_ == o.comps_; }

    std::string to_string() const;

private:
    std::map<JetVar, RatExpr> comps_;
};

// --- exterior algebra -------------------------------------------------------

ScalarForm wedge(const ScalarForm& a, const ScalarForm& b);
ScalarForm exterior_d(const ScalarForm& w);

// --- total derivatives ------------------------------------------------------

// Truncation of the total derivative T_j to coordinates u^alpha_I with
// |I| <= order_cap and alpha <= n.
VectorField total_derivative_field(int m, int n, int j, int order_cap);

// Interior product with an explicit vector field (first-slot convention).
ScalarForm contract(const ScalarForm& w, const VectorField& X);

// i_j: contraction with T_j. Exact for any operand (equals contract() with
// the field truncated at the operand's order).
ScalarForm contract_total(int j, const ScalarForm& w);

// d_j: Lie derivative along T_j. Acts on coefficients by the total-derivative
// derivation and sends du^alpha_I to du^alpha_{I+1_j}.
ScalarForm lie_total(int j, const ScalarForm& w);

// d_I: iteration of lie_total over the slots of I (order immaterial).
ScalarForm lie_multi(const MultiIndex& I, const ScalarForm& w);

// --- vertical endomorphisms -------------------------------------------------
//
// The vertical endomorphism acts on basis covectors with the derivative
// multiplicity of the slot being lowered,
//
//     S^i(du^alpha_J) = J(i) du^alpha_{J-1_i},
//
// vanishes on coefficients, and extends to wedge products as a degree-0
// derivation. The multiplicities are forced by the commutation relations
// with the total derivatives (see the operator-identity test suite); with
// them the iterated composite on a vector field gives
//
//     S^I(T_j) = sum_K ((K+I)!/K!) u^alpha_{K+1_j} d/du^alpha_{K+I}.

// S^i as a derivation.
ScalarForm vertical(int i, const ScalarForm& w);

// S^I, the iterated derivation.
ScalarForm vertical_iter(const MultiIndex& I, const ScalarForm& w);

// The single contraction of the composite endomorphism: replaces exactly one
// covector factor per term, du^alpha_J -> (J!/(J-I)!) du^alpha_{J-I}.
// Agrees with vertical_iter on 1-forms.
ScalarForm vertical_composite(const MultiIndex& I, const ScalarForm& w);

// --- fundamental vector fields ----------------------------------------------

// Delta^I_j = S^I(T_j), truncated to base coordinates with |K| <= order_cap.
VectorField delta_field(const MultiIndex& I, int j, int n, int order_cap);

// i^I_j: contraction with Delta^I_j (exact, no truncation needed).
ScalarForm contract_delta(const MultiIndex& I, int j, const ScalarForm& w);

// d^I_j: Lie derivative along Delta^I_j; preserves max_order.
ScalarForm lie_delta(const MultiIndex& I, int j, const ScalarForm& w);

// --- mixed sums ---------------------------------------------------------------

// sum over |I| = p of (1/I!) d_I S^I, the degree-p cross term of total
// derivatives against vertical endomorphisms; identity for p = 0.
ScalarForm lie_vertical_sum(int p, int m, const ScalarForm& w);

}  // namespace homvar
