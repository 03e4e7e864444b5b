#pragma once

#include "homvar/forms.hpp"

#include <cstdint>
#include <random>

namespace homvar {

// Seed-reproducible generator for small polynomial scalar forms. Avoids
// std::uniform_int_distribution so that streams are identical across
// standard libraries.
struct RandomFormConfig {
    int m = 2;
    int n = 2;
    int max_order = 3;      // jet order of covectors and coefficients
    int max_poly_degree = 2;
    int max_terms = 2;
};

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline MultiIndex random_multiindex(std::mt19937_64& rng,
                                    const RandomFormConfig& cfg, int max_len) {
    MultiIndex I(cfg.m);
    int len = rand_int(rng, 0, max_len);
    for (int t = 0; t < len; ++t) I = I.incremented(rand_int(rng, 1, cfg.m));
    return I;
}

inline JetVar random_jetvar(std::mt19937_64& rng, const RandomFormConfig& cfg) {
    return JetVar(rand_int(rng, 1, cfg.n),
                  random_multiindex(rng, cfg, cfg.max_order));
}

inline RatExpr random_poly_coeff(std::mt19937_64& rng,
                                 const RandomFormConfig& cfg) {
    RatExpr e = RatExpr::from_int(rand_int(rng, 1, 3) * (rng() % 2 ? 1 : -1));
    int deg = rand_int(rng, 0, cfg.max_poly_degree);
    for (int t = 0; t < deg; ++t)
        e = e * RatExpr::variable(random_jetvar(rng, cfg));
    return e;
}

inline ScalarForm random_scalar_form_of_degree(std::mt19937_64& rng,
                                               const RandomFormConfig& cfg,
                                               int degree) {
    ScalarForm f(degree);
    int terms = rand_int(rng, 1, cfg.max_terms);
    for (int t = 0; t < terms; ++t) {
        ScalarForm::Tuple tuple;
        for (int a = 0; a < degree; ++a) {
            JetVar v = random_jetvar(rng, cfg);
            tuple.emplace_back(v.alpha, v.index);
        }
        f.add_term(std::move(tuple), random_poly_coeff(rng, cfg));
    }
    return f;
}

inline ScalarForm random_scalar_form(std::mt19937_64& rng,
                                     const RandomFormConfig& cfg,
                                     int max_degree = 2) {
    return random_scalar_form_of_degree(rng, cfg, rand_int(rng, 0, max_degree));
}

}  // namespace homvar
