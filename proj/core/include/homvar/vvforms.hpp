#pragma once

#include "homvar/forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace homvar {

// Element of Omega^{r,s}: an r-form taking values in the alternating
// s-linear forms on the m-dimensional model space. Components are stored on
// strictly increasing frame-index tuples (i_1 < ... < i_s) in the wedge basis
// dt^{i_1} ^ ... ^ dt^{i_s}; lookups with permuted tuples return the signed
// component. s = 0 holds a single scalar component.
class VectorValuedForm {
public:
    using Frame = std::vector<int>;

    VectorValuedForm(int m, int r, int s) : m_(m), r_(r), s_(s) {}

    static VectorValuedForm zero(int m, int r, int s) {
        return VectorValuedForm(m, r, s);
    }

    int m() const { return m_; }
    int form_degree() const { return r_; }
    int value_degree() const { return s_; }
    bool is_zero() const { return comps_.empty(); }

    // Adds into the component of `frame` (any order; sign handled here).
    void add_component(Frame frame, const ScalarForm& phi);

    // Signed lookup; zero form when the tuple repeats an index.
    ScalarForm component(const Frame& frame) const;

    const std::map<Frame, ScalarForm>& components() const { return comps_; }

    VectorValuedForm operator+(const VectorValuedForm& o) const;
    VectorValuedForm operator-(const VectorValuedForm& o) const;
    VectorValuedForm times_scalar(const Rational& c) const;

    bool operator==(const VectorValuedForm& o) const;

    // Highest jet order present across all components.
    int max_order() const;

    std::string to_string() const;

private:
    int m_, r_, s_;
    std::map<Frame, ScalarForm> comps_;
};

// Componentwise de Rham differential: (r, s) -> (r+1, s).
VectorValuedForm vv_d(const VectorValuedForm& phi);

// Total derivative operator: (r, s) -> (r, s+1), wedging dt^j in front and
// applying the Lie derivative d_j to each component. Identically zero from
// s = m.
VectorValuedForm vv_dT(const VectorValuedForm& phi);

// Contraction with the total derivatives: (r, s) -> (r-1, s+1).
VectorValuedForm vv_iT(const VectorValuedForm& phi);

// The homotopy operator of the bicomplex columns: (r, s) -> (r, s-1).
//
// Component U of the result collects, over the frame indices j not in U, the
// signed application of the scalar operator
//
//     P^j = sum_{p=0}^{rk-1} c_p D_p S^j,
//     c_p = (-1)^p (m-s)! p! / (r^{p+1} (m-s+p+1)!),
//
// to the component at U + {j}, where D_p is lie_vertical_sum, r the form
// degree, s the operand's value degree and k the operand's max jet order.
VectorValuedForm vv_homotopy(const VectorValuedForm& phi);

// Same but with an explicit truncation bound on p (used to confirm that any
// bound at least rk-1 gives the same result).
VectorValuedForm vv_homotopy_bounded(const VectorValuedForm& phi, int p_bound);

}  // namespace homvar
