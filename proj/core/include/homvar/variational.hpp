#pragma once

#include "homvar/vvforms.hpp"

#include <string>
#include <vector>

namespace homvar {

// A homogeneous variational problem: m independent-variable slots, n
// dependent variables, declared jet order k, and the Lagrangian function.
struct Lagrangian {
    int m;
    int n;
    int k;
    RatExpr L;
};

struct HomogeneityViolation {
    MultiIndex I;
    int j;
    RatExpr residual;
};

struct HomogeneityReport {
    bool is_homogeneous = true;
    std::vector<HomogeneityViolation> violations;
};

// Homogeneity conditions: d^{1_i}_j L = delta^i_j L for all i, j and
// d^I_j L = 0 for 2 <= |I| <= k+1 (higher lengths annihilate any order-k
// function identically). Residuals are recorded per (I, j).
HomogeneityReport check_homogeneous(const Lagrangian& lag);

// Throws NotHomogeneous (with the first violation) unless the report is clean.
void require_homogeneous(const Lagrangian& lag);

// The m Hilbert forms, 1-forms on the (2k-1)-th order bundle:
//
//   theta^i = sum_{|I|=0}^{k} (-1)^{|I|} / (I! (|I|+1)) d_I S^{I+1_i} dL.
//
// Returned 1-indexed as [theta^1 .. theta^m].
std::vector<ScalarForm> hilbert_forms(const Lagrangian& lag);

// Theta_0 = L (x) dt^1 ^ ... ^ dt^m in Omega^{0,m}.
VectorValuedForm theta0(const Lagrangian& lag);

// Theta_q, the q-th iterate of the homotopy operator composed with d applied
// to Theta_0; lives in Omega^{q, m-q}. Requires 0 <= q <= m and homogeneity.
VectorValuedForm theta(const Lagrangian& lag, int q);

// Euler-Lagrange form by the intrinsic route epsilon = dL - d_i theta^i
// (needs homogeneity) and by the coordinate route
// sum (-1)^{|I|} d_I(dL/du^alpha_I) du^alpha (no precondition).
ScalarForm euler_lagrange_intrinsic(const Lagrangian& lag);
ScalarForm euler_lagrange_coordinate(const Lagrangian& lag);

// E_q = (Pd)^q (epsilon (x) d^m t) in Omega^{q+1, m-q}.
VectorValuedForm euler_sequence(const Lagrangian& lag, int q);

// Residual of the descent identity E_q - (-1)^q (d Theta_q - d_T Theta_{q+1});
// zero for 0 <= q <= m-1.
VectorValuedForm euler_sequence_residual(const Lagrangian& lag, int q);

struct RecoveryResult {
    bool holds;
    VectorValuedForm residual;  // i_T Theta_{q+1} - (m-q) Theta_q
};

// The recovery formula Theta_q = 1/(m-q) i_T Theta_{q+1} for 0 <= q <= m-1.
RecoveryResult verify_recovery(const Lagrangian& lag, int q);

struct ClosureResult {
    bool is_null;
    bool dtheta_m_zero;
    // The equivalence is asserted only for m in {1, 2}; for larger m the
    // computation is still performed and reported.
    bool equivalence_asserted;
};

// Null Lagrangian (epsilon = 0 by the coordinate route) versus closure of the
// fundamental form d Theta_m = 0.
ClosureResult verify_closure(const Lagrangian& lag);

// Closed first-order fundamental form (1/m!) (S^1 d) ... (S^m d) L; requires
// k = 1 (throws OrderMismatch otherwise). Equals the scalar component of
// theta(lag, m).
ScalarForm first_order_fundamental(const Lagrangian& lag);

// Checks the expansion of d^I_i theta^j against the coefficient display
//
//   d^I_i theta^j = - sum_M ((-1)^{|M|}/M!) C_{I,M,i,j} d_M S^{I+M-1_i+1_j} dL
//
// by computing both sides; exact equality. Requires |I| >= 1.
bool hilbert_derivative_expansion_check(const Lagrangian& lag,
                                        const MultiIndex& I, int i, int j);

// S^i theta^j = S^j theta^i for all pairs.
bool hilbert_vertical_symmetry_check(const Lagrangian& lag);

}  // namespace homvar
