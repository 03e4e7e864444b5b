#include "homvar/vvforms.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace homvar {

namespace {

// Sorts a frame tuple, counting swaps; nullopt when an index repeats.
std::optional<std::pair<VectorValuedForm::Frame, int>> canonical_frame(
    VectorValuedForm::Frame f) {
    int sign = 1;
    for (size_t i = 1; i < f.size(); ++i) {
        size_t j = i;
        while (j > 0 && f[j] < f[j - 1]) {
            std::swap(f[j], f[j - 1]);
            sign = -sign;
            --j;
        }
    }
    for (size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1]) return std::nullopt;
    return std::make_pair(std::move(f), sign);
}

// Sign of inserting j in front of the increasing tuple and re-sorting.
int insertion_sign(const VectorValuedForm::Frame& frame, int j) {
    int below = 0;
    for (int t : frame)
        if (t < j) ++below;
    return below % 2 == 0 ? 1 : -1;
}

VectorValuedForm::Frame insert_sorted(const VectorValuedForm::Frame& frame, int j) {
    VectorValuedForm::Frame r = frame;
    r.insert(std::upper_bound(r.begin(), r.end(), j), j);
    return r;
}

}  // namespace

void VectorValuedForm::add_component(Frame frame, const ScalarForm& phi) {
    if (phi.is_zero()) return;
    auto canon = canonical_frame(std::move(frame));
    if (!canon) return;
    auto& [key, sign] = *canon;
    ScalarForm add = sign == 1 ? phi : -phi;
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(std::move(key), std::move(add));
    } else {
        it->second = it->second + add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

ScalarForm VectorValuedForm::component(const Frame& frame) const {
    auto canon = canonical_frame(frame);
    if (!canon) return ScalarForm::zero(r_);
    auto it = comps_.find(canon->first);
    if (it == comps_.end()) return ScalarForm::zero(r_);
    return canon->second == 1 ? it->second : -it->second;
}

VectorValuedForm VectorValuedForm::operator+(const VectorValuedForm& o) const {
    VectorValuedForm r = *this;
    for (const auto& [f, phi] : o.comps_) r.add_component(f, phi);
    return r;
}

VectorValuedForm VectorValuedForm::operator-(const VectorValuedForm& o) const {
    VectorValuedForm r = *this;
    for (const auto& [f, phi] : o.comps_) r.add_component(f, -phi);
    return r;
}

VectorValuedForm VectorValuedForm::times_scalar(const Rational& c) const {
    VectorValuedForm r(m_, r_, s_);
    if (c == 0) return r;
    for (const auto& [f, phi] : comps_) r.comps_.emplace(f, phi.times_scalar(c));
    return r;
}

bool VectorValuedForm::operator==(const VectorValuedForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    return m_ == o.m_ && r_ == o.r_ && s_ == o.s_ && comps_ == o.comps_;
}

int VectorValuedForm::max_order() const {
    int k = 0;
    for (const auto& [f, phi] : comps_) k = std::max(k, phi.max_order());
    return k;
}

std::string VectorValuedForm::to_string() const {
    std::ostringstream os;
    os << "Omega^{" << r_ << "," << s_ << "}";
    if (comps_.empty()) {
        os << " 0";
        return os.str();
    }
    for (const auto& [f, phi] : comps_) {
        os << "\n  [";
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) os << ",";
            os << f[i];
        }
        os << "] " << phi.to_string();
    }
    return os.str();
}

VectorValuedForm vv_d(const VectorValuedForm& phi) {
    VectorValuedForm r(phi.m(), phi.form_degree() + 1, phi.value_degree());
    for (const auto& [f, c] : phi.components()) r.add_component(f, exterior_d(c));
    return r;
}

VectorValuedForm vv_dT(const VectorValuedForm& phi) {
    int s_out = std::min(phi.value_degree() + 1, phi.m());
    VectorValuedForm r(phi.m(), phi.form_degree(), s_out);
    if (phi.value_degree() >= phi.m()) return r;  // dt^j ^ dt^{full} = 0
    for (const auto& [f, c] : phi.components()) {
        for (int j = 1; j <= phi.m(); ++j) {
            if (std::binary_search(f.begin(), f.end(), j)) continue;
            ScalarForm dc = lie_total(j, c);
            if (dc.is_zero()) continue;
            if (insertion_sign(f, j) < 0) dc = -dc;
            r.add_component(insert_sorted(f, j), dc);
        }
    }
    return r;
}

VectorValuedForm vv_iT(const VectorValuedForm& phi) {
    if (phi.form_degree() == 0)
        throw ContractDegreeZero("i_T on a vector-valued 0-form");
    int s_out = std::min(phi.value_degree() + 1, phi.m());
    VectorValuedForm r(phi.m(), phi.form_degree() - 1, s_out);
    if (phi.value_degree() >= phi.m()) return r;
    for (const auto& [f, c] : phi.components()) {
        for (int j = 1; j <= phi.m(); ++j) {
            if (std::binary_search(f.begin(), f.end(), j)) continue;
            ScalarForm ic = contract_total(j, c);
            if (ic.is_zero()) continue;
            if (insertion_sign(f, j) < 0) ic = -ic;
            r.add_component(insert_sorted(f, j), ic);
        }
    }
    return r;
}

VectorValuedForm vv_homotopy_bounded(const VectorValuedForm& phi, int p_bound) {
    const int m = phi.m();
    const int r_deg = phi.form_degree();
    const int s = phi.value_degree();
    VectorValuedForm out(m, r_deg, s - 1);

    // c_p = (-1)^p (m-s)! p! / (r^{p+1} (m-s+p+1)!)
    auto coeff = [&](int p) {
        BigInt num = int_factorial(m - s) * int_factorial(p);
        BigInt den = int_factorial(m - s + p + 1);
        BigInt rpow = 1;
        for (int i = 0; i <= p; ++i) rpow *= r_deg;
        den *= rpow;
        Rational c(num, den);
        return p % 2 == 0 ? c : -c;
    };

    auto apply_P = [&](int j, const ScalarForm& c) {
        ScalarForm acc = ScalarForm::zero(r_deg);
        ScalarForm v = vertical(j, c);
        if (v.is_zero()) return acc;
        for (int p = 0; p <= p_bound; ++p) {
            ScalarForm term = lie_vertical_sum(p, m, v);
            if (term.is_zero()) continue;
            acc = acc + term.times_scalar(coeff(p));
        }
        return acc;
    };

    for (const auto& [f, c] : phi.components()) {
        for (size_t a = 0; a < f.size(); ++a) {
            int j = f[a];
            ScalarForm pc = apply_P(j, c);
            if (pc.is_zero()) continue;
            if (a % 2 == 1) pc = -pc;
            VectorValuedForm::Frame rest;
            rest.reserve(f.size() - 1);
            for (size_t i = 0; i < f.size(); ++i)
                if (i != a) rest.push_back(f[i]);
            out.add_component(std::move(rest), pc);
        }
    }
    return out;
}

VectorValuedForm vv_homotopy(const VectorValuedForm& phi) {
    int bound = phi.form_degree() * phi.max_order() - 1;
    if (bound < 0) bound = -1;  // empty sum
    return vv_homotopy_bounded(phi, bound);
}

}  // namespace homvar
