#include "homvar/variational.hpp"

#include "homvar/identities.hpp"
#include "homvar/parse.hpp"

#include <numeric>

namespace homvar {

namespace {

ScalarForm lagrangian_as_form(const Lagrangian& lag) {
    return ScalarForm::from_expr(lag.L);
}

VectorValuedForm::Frame full_frame(int m) {
    VectorValuedForm::Frame f(static_cast<size_t>(m));
    std::iota(f.begin(), f.end(), 1);
    return f;
}

}  // namespace

HomogeneityReport check_homogeneous(const Lagrangian& lag) {
    HomogeneityReport report;
    ScalarForm Lf = lagrangian_as_form(lag);
    for (int i = 1; i <= lag.m; ++i) {
        MultiIndex I = MultiIndex::unit(lag.m, i);
        for (int j = 1; j <= lag.m; ++j) {
            RatExpr expected = (i == j) ? lag.L : RatExpr::zero();
            RatExpr got = lie_delta(I, j, Lf).scalar();
            RatExpr residual = got - expected;
            if (!residual.is_zero()) {
                report.is_homogeneous = false;
                report.violations.push_back({I, j, residual});
            }
        }
    }
    for (int len = 2; len <= lag.k + 1; ++len) {
        for (const MultiIndex& I : enumerate_multiindices(lag.m, len)) {
            for (int j = 1; j <= lag.m; ++j) {
                RatExpr residual = lie_delta(I, j, Lf).scalar();
                if (!residual.is_zero()) {
                    report.is_homogeneous = false;
                    report.violations.push_back({I, j, residual});
                }
            }
        }
    }
    return report;
}

void require_homogeneous(const Lagrangian& lag) {
    HomogeneityReport report = check_homogeneous(lag);
    if (report.is_homogeneous) return;
    const auto& v = report.violations.front();
    throw NotHomogeneous("Lagrangian is not homogeneous: residual " +
                         print_expr(v.residual) + " at I=" + v.I.to_string() +
                         ", j=" + std::to_string(v.j));
}

std::vector<ScalarForm> hilbert_forms(const Lagrangian& lag) {
    require_homogeneous(lag);
    ScalarForm dL = exterior_d(lagrangian_as_form(lag));
    std::vector<ScalarForm> out;
    out.reserve(static_cast<size_t>(lag.m));
    for (int i = 1; i <= lag.m; ++i) {
        ScalarForm acc = ScalarForm::zero(1);
        for (int len = 0; len <= lag.k; ++len) {
            for (const MultiIndex& I : enumerate_multiindices(lag.m, len)) {
                ScalarForm v = vertical_iter(I.incremented(i), dL);
                if (v.is_zero()) continue;
                ScalarForm term = lie_multi(I, v);
                Rational c(BigInt(1), I.factorial() * (len + 1));
                if (len % 2 == 1) c = -c;
                acc = acc + term.times_scalar(c);
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

VectorValuedForm theta0(const Lagrangian& lag) {
    VectorValuedForm t0(lag.m, 0, lag.m);
    t0.add_component(full_frame(lag.m), lagrangian_as_form(lag));
    return t0;
}

VectorValuedForm theta(const Lagrangian& lag, int q) {
    require_homogeneous(lag);
    VectorValuedForm t = theta0(lag);
    for (int step = 0; step < q; ++step) t = vv_homotopy(vv_d(t));
    return t;
}

ScalarForm euler_lagrange_intrinsic(const Lagrangian& lag) {
    std::vector<ScalarForm> thetas = hilbert_forms(lag);
    ScalarForm eps = exterior_d(lagrangian_as_form(lag));
    for (int i = 1; i <= lag.m; ++i)
        eps = eps - lie_total(i, thetas[static_cast<size_t>(i - 1)]);
    return eps;
}

ScalarForm euler_lagrange_coordinate(const Lagrangian& lag) {
    ScalarForm eps = ScalarForm::zero(1);
    std::set<JetVar> vars = lag.L.variables();
    std::set<int> alphas;
    for (const JetVar& v : vars) alphas.insert(v.alpha);
    for (int alpha : alphas) {
        RatExpr total = RatExpr::zero();
        for (int len = 0; len <= lag.k; ++len) {
            for (const MultiIndex& I : enumerate_multiindices(lag.m, len)) {
                RatExpr dLdu = lag.L.partial(JetVar(alpha, I));
                if (dLdu.is_zero()) continue;
                RatExpr term =
                    lie_multi(I, ScalarForm::from_expr(dLdu)).scalar();
                total = len % 2 == 0 ? total + term : total - term;
            }
        }
        ScalarForm::Tuple cov{Covector(alpha, MultiIndex(lag.m))};
        eps.add_term(cov, total);
    }
    return eps;
}

VectorValuedForm euler_sequence(const Lagrangian& lag, int q) {
    ScalarForm eps = euler_lagrange_intrinsic(lag);
    VectorValuedForm e(lag.m, 1, lag.m);
    e.add_component(full_frame(lag.m), eps);
    for (int step = 0; step < q; ++step) e = vv_homotopy(vv_d(e));
    return e;
}

VectorValuedForm euler_sequence_residual(const Lagrangian& lag, int q) {
    VectorValuedForm eq = euler_sequence(lag, q);
    VectorValuedForm rhs =
        vv_d(theta(lag, q)) - vv_dT(theta(lag, q + 1));
    if (q % 2 == 1) rhs = rhs.times_scalar(Rational(-1));
    return eq - rhs;
}

RecoveryResult verify_recovery(const Lagrangian& lag, int q) {
    VectorValuedForm lhs = vv_iT(theta(lag, q + 1));
    VectorValuedForm rhs = theta(lag, q).times_scalar(Rational(lag.m - q));
    VectorValuedForm residual = lhs - rhs;
    return {residual.is_zero(), residual};
}

ClosureResult verify_closure(const Lagrangian& lag) {
    require_homogeneous(lag);
    ClosureResult r{};
    r.is_null = euler_lagrange_coordinate(lag).is_zero();
    r.dtheta_m_zero = vv_d(theta(lag, lag.m)).is_zero();
    r.equivalence_asserted = lag.m <= 2;
    return r;
}

ScalarForm first_order_fundamental(const Lagrangian& lag) {
    if (lag.k != 1)
        throw OrderMismatch("the closed product formula requires a first-order "
                            "Lagrangian, got k=" + std::to_string(lag.k));
    require_homogeneous(lag);
    ScalarForm acc = lagrangian_as_form(lag);
    for (int i = lag.m; i >= 1; --i) acc = vertical(i, exterior_d(acc));
    return acc.times_scalar(Rational(BigInt(1), int_factorial(lag.m)));
}

bool hilbert_derivative_expansion_check(const Lagrangian& lag,
                                        const MultiIndex& I, int i, int j) {
    std::vector<ScalarForm> thetas = hilbert_forms(lag);
    ScalarForm lhs = lie_delta(I, i, thetas[static_cast<size_t>(j - 1)]);

    ScalarForm dL = exterior_d(lagrangian_as_form(lag));
    ScalarForm rhs = ScalarForm::zero(1);
    MultiIndex one_i = MultiIndex::unit(lag.m, i);
    int mbound = std::max(0, lag.L.max_order() - I.length() + 1);
    for (int len = 0; len <= mbound; ++len) {
        for (const MultiIndex& M : enumerate_multiindices(lag.m, len)) {
            Rational c = coeff_C(I, M, i, j);
            if (c == 0) continue;
            // C != 0 guarantees the lowered index is valid.
            MultiIndex target = I.plus(M).incremented(j).minus(one_i);
            ScalarForm v = vertical_iter(target, dL);
            if (v.is_zero()) continue;
            ScalarForm term = lie_multi(M, v);
            Rational scale = c / Rational(M.factorial());
            if (len % 2 == 1) scale = -scale;
            rhs = rhs - term.times_scalar(scale);
        }
    }
    return lhs == rhs;
}

bool hilbert_vertical_symmetry_check(const Lagrangian& lag) {
    std::vector<ScalarForm> thetas = hilbert_forms(lag);
    for (int i = 1; i <= lag.m; ++i) {
        for (int j = i + 1; j <= lag.m; ++j) {
            ScalarForm a = vertical(i, thetas[static_cast<size_t>(j - 1)]);
            ScalarForm b = vertical(j, thetas[static_cast<size_t>(i - 1)]);
            if (!(a == b)) return false;
        }
    }
    return true;
}

}  // namespace homvar
