#pragma once

#include <random>
#include <vector>

#include "milnor/mpoly.hpp"
#include "milnor/parser.hpp"
#include "milnor/unipoly.hpp"

namespace milnor::testing {

/// Deterministic RNG for reproducible property tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234);
    return gen;
}

inline MPoly random_mpoly(VarSet vars, int max_deg, int max_terms, int coeff_bound = 9) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> expo(0, max_deg);
    MPoly p(vars);
    int n = nterms(rng());
    auto vlist = vars.list();
    for (int i = 0; i < n; ++i) {
        Monomial m;
        int budget = max_deg;
        for (Var v : vlist) {
            std::uniform_int_distribution<int> e(0, budget);
            int k = e(rng());
            m[v] = static_cast<uint16_t>(k);
            budget -= k;
        }
        p.add_term(m, Rat(coeff(rng())));
    }
    return p;
}

inline UniPoly random_unipoly(Var main, int deg, int coeff_bound = 9) {
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    VarSet cv;
    std::vector<MPoly> cs;
    for (int i = 0; i <= deg; ++i) cs.push_back(MPoly::constant(cv, Rat(coeff(rng()))));
    if (cs.back().is_zero()) cs.back() = MPoly::constant(cv, Rat(1));
    return UniPoly(main, cv, cs);
}

/// Naive Sylvester-matrix determinant by minor expansion over column subsets.
/// Independent of the library's PRS and Bareiss paths; test oracle only.
MPoly sylvester_determinant_oracle(const UniPoly& p, const UniPoly& q);

/// Brute-force local Milnor number at the origin: the dimension of
/// k[u,v]/(g_u, g_v, m^N) for stabilizing N, by exact Gaussian elimination.
/// Test oracle only.
int quotient_dimension_oracle(const MPoly& g, Var u, Var v);

}  // namespace milnor::testing
