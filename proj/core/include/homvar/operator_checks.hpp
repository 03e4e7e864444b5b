#pragma once

#include "homvar/forms.hpp"

namespace homvar {

// Exact operator identities relating contractions, Lie derivatives and
// vertical endomorphisms, applied to a concrete form. Each returns true when
// both sides agree. Contraction-based checks require degree >= 1; an index
// I - 1_j with I(j) = 0 contributes nothing (the right-hand side carries the
// factor I(j)), and a zero multi-index on a delta operator means the plain
// total-derivative operator.

// [i^I_i, d_j] = I(j) i^{I-1_j}_i
bool check_commutator_contract_lie(const MultiIndex& I, int i, int j,
                                   const ScalarForm& w);

// [d^I_i, S~^J] = -J(i) S~^{J+I-1_i}
bool check_commutator_lie_composite(const MultiIndex& I, const MultiIndex& J,
                                    int i, const ScalarForm& w);

// [i^I_i, S~^J] = i^{I+J}_i
bool check_commutator_contract_composite(const MultiIndex& I,
                                         const MultiIndex& J, int i,
                                         const ScalarForm& w);

// [d^I_i, d_j] = I(j) d^{I-1_j}_i
bool check_commutator_lie_lie(const MultiIndex& I, int i, int j,
                              const ScalarForm& w);

// S^J D_p = sum_{q=0}^{min(|J|,p)} binom(|J|,q) r^q D_{p-q} S^J on r-forms;
// on 1-forms the coefficient reduces to G_{|J|,q}.
bool check_vertical_mixed_commutation(const MultiIndex& J, int p, int m,
                                      const ScalarForm& w);

// i_k D_p = sum_{|K|=0}^{p} sum_{|J|=p-|K|} (1/(J! K!)) d_{J+K} S^J i^K_k
bool check_contraction_mixed_expansion(int k, int p, int m, const ScalarForm& w);

// d_j = i_j d + d i_j (on 0-forms the d i_j summand is dropped)
bool check_cartan_total(int j, const ScalarForm& w);

}  // namespace homvar
