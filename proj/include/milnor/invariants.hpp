#pragma once

#include "milnor/singular.hpp"

namespace milnor {

/// One coprime cluster of values of the merged bifurcation set with its
/// invariants. mu_c = 0 means the cluster holds no affine critical value,
/// lambda_c = 0 none at infinity.
struct ValueCluster {
    UniPoly defining;  // squarefree in s; coefficients rational or in t
    int mu_c = 0;
    int lambda_c = 0;

    int value_count() const { return defining.degree(); }
};

/// The discriminant pencil Delta(x, s) = Disc_y(g(x,y) - s) for the
/// monic-sheared g, normalized to its primitive part in x.
struct DeltaPencil {
    UniPoly delta_x;  // primitive part, viewed in x; coefficients q_i in s (and t)
    MPoly content;    // stripped content; never involves s
    Shear shear;
    MPoly leading;  // y^d coefficient of g: a constant, or a t-polynomial in the family pipeline
    int k = 0;      // deg_x Delta

    /// q_i(s[,t]), 1-based: q(1) is the leading x-coefficient.
    UniPoly q(int i) const;
};

/// Throws input_error on constant input; start_slope lets tests pick a
/// different admissible shear.
DeltaPencil delta_pencil(const MPoly& f, bool allow_parametric_leading = false,
                         int start_slope = 0);

/// Critical values at infinity from the vanishing pattern of the q_i, split
/// into clusters of constant lambda_c; the degree-drop characterization is
/// recomputed independently and asserted equal.
std::vector<ValueCluster> b_infinity_clusters(const DeltaPencil& dp);

/// Affine critical values (exact defining polynomials) with per-cluster mu_c
/// from the critical-point data.
std::vector<ValueCluster> b_affine_clusters(const AffineCriticalData& data);

struct BInfinityData {
    std::vector<ValueCluster> clusters;
    AlgebraicValueSet values;
    int lambda_total = 0;
    UniPoly q1_squarefree;  // primitive squarefree part of q1 (empty when B_inf is empty)
};

struct BAffineData {
    std::vector<ValueCluster> clusters;
    AlgebraicValueSet values;
    int mu_total = 0;
};

/// The full invariant vector of a single (t-free) polynomial.
struct InvariantRecord {
    MPoly poly;
    int d = 0, k = 0, mu = 0, lambda = 0, wedge = 0;
    Shear shear_used;
    DeltaPencil pencil;
    AffineCriticalData critical_points;
    BAffineData b_aff;
    BInfinityData b_inf;
    std::vector<ValueCluster> b_clusters;  // merged B = B_aff cup B_inf
    AlgebraicValueSet b;                   // certified boxes of the merged set
    int sigma_point_count = 0;
    std::vector<Rat> chart_probes;
};

/// Assembles d, k, mu, lambda, B_aff, B_inf, B; asserts the identity
/// k = mu + lambda + d - 1 and the agreement of the discriminant route with
/// the chart route per value cluster. Any failed assertion raises
/// inconsistency_error (no route is silently preferred).
InvariantRecord invariant_record(const MPoly& f, const Rat& precision = default_precision());

enum class EulerCheckResult { verified, violated };

/// Consistency form of the Euler-characteristic identity
/// chi(f^-1(c)) = 1 - (mu+lambda) + mu_c + lambda_c: the per-cluster numbers
/// are recomputed from the pencil and the critical points and compared.
EulerCheckResult euler_check(const InvariantRecord& rec, size_t cluster_index);

}  // namespace milnor
