#pragma once

#include <vector>

#include "milnor/unipoly.hpp"

namespace milnor {

/// A validated genericity assumption broke for the current shear; callers
/// retry with the next deterministic slope.
struct analysis_failure : std::runtime_error {
    explicit analysis_failure(const std::string& msg) : std::runtime_error(msg) {}
};

/// One coprime squarefree cluster of base-variable coordinates of the common
/// zeros of a bivariate system, with the structure shared by its roots.
struct SystemCluster {
    UniPoly cluster;  // C(u); coefficients may involve parameters
    int ord = 0;      // vanishing order of Res_v(A,B) at each root of C
    int gcd_degree = 0;
    /// The unique point above u0 has v = v_num(u0) / v_den(u0); v_den has no
    /// root on the cluster.
    UniPoly v_num, v_den;
};

/// Cluster decomposition of the common zeros of (A, B) in (u, v).
///
/// Requires lc_v(B) free of u and v (a constant, possibly involving the
/// parameters), deg_v B >= 1. With that normalization the vanishing order of
/// R = Res_v(A, B) at u0 equals the sum of local intersection multiplicities
/// of (A, B) above u0, and every root of R lies below a common zero.
struct SystemAnalysis {
    Var u = Var::x, v = Var::y;
    UniPoly res;  // R(u), nonzero
    std::vector<SystemCluster> clusters;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& c : clusters) n += c.ord * c.cluster.degree();
        return n;
    }
};

/// Throws nonisolated_error when R vanishes identically (the system has a
/// common curve) and analysis_failure when some cluster fails the
/// one-point-per-root validation.
SystemAnalysis analyze_system(const UniPoly& A, const UniPoly& B);

/// Critical-point analysis of g in the coordinates (u, v): shears g monic in
/// v (slopes 0, 1, -1, ...), analyzes (g_u, g_v), and retries the shear when
/// the cluster validation fails.
struct CriticalSystem {
    MPoly g;        // sheared polynomial
    Shear shear;    // u <- u + slope * v
    MPoly leading;  // coefficient of v^deg in g
    SystemAnalysis analysis;
};
CriticalSystem analyze_critical_points(const MPoly& f, Var u, Var v,
                                       bool allow_parametric_leading = false,
                                       int slope_budget = 64);

/// Exact defining polynomial, in value_var, of the multiset of values
/// g(u0, v(u0)) over the roots u0 of the cluster: the s-roots are exactly the
/// values, with multiplicity = number of cluster roots sharing the value.
UniPoly cluster_value_poly(const SystemCluster& cl, const MPoly& g, Var u, Var v, Var value_var);

}  // namespace milnor
