#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/fiber.hpp"
#include "milnor/roots.hpp"

namespace milnor {

/// Points of the singular locus at infinity sharing a squarefree defining
/// polynomial. Points (a : 1 : 0) are encoded by the roots a of `defining`
/// (a polynomial in x, coefficients rational or in t); the point (1 : 0 : 0)
/// is carried separately since it lives in the other chart.
struct SigmaCluster {
    UniPoly defining;
};

struct SigmaSet {
    std::vector<SigmaCluster> clusters;  // chart y = 1
    bool has_x_point = false;            // (1 : 0 : 0), chart x = 1
    int degree_in_t = 0;                 // nonzero when the defining data varies with t

    bool empty() const { return clusters.empty() && !has_x_point; }
    int point_count() const {
        int n = has_x_point ? 1 : 0;
        for (const auto& c : clusters) n += c.defining.degree();
        return n;
    }
    /// Canonical product of the defining polynomials (set comparison).
    UniPoly product() const;
};

/// Common zeros, on the line at infinity, of both partials of the degree form
/// and of the next form. Exact; empty set allowed.
SigmaSet sigma(const MPoly& f);

/// A reference to one rational point of Sigma (the exact-coordinate charts of
/// the public operations; algebraic clusters are handled cluster-wise by the
/// chart route below).
struct SigmaPointRef {
    bool x_chart = false;  // true: the point (1:0:0); false: (alpha:1:0)
    Rat alpha = 0;         // meaningful when !x_chart
};

/// Curve germ at the origin in the two designated local variables.
struct PlaneGerm {
    MPoly poly;
    Var u = Var::x;
    Var v = Var::y;
};

struct LocalMilnorResult {
    int mu = 0;
    Shear shear_used;
    std::string certificate;
};

/// Local Milnor number at the origin: the vanishing order of the sheared
/// resultant of the partials, with the shear's genericity validated (single
/// point above the origin's coordinate, no intersection lost at infinity via
/// the constant leading coefficient, separated clusters).
LocalMilnorResult local_milnor(const PlaneGerm& germ);

/// Chart germ of f at a rational point at infinity: the homogenization
/// evaluated in the chart, minus c * x0^d, translated to the origin.
PlaneGerm infinity_chart(const MPoly& f, const SigmaPointRef& p, const Rat& c);
/// Symbolic-value variant: c is the variable s.
PlaneGerm infinity_chart_symbolic(const MPoly& f, const SigmaPointRef& p);

/// Generic local Milnor number of the chart pencil at a rational Sigma point:
/// two agreeing probe values away from the candidate critical values at
/// infinity, cross-checked against the symbolic pencil analysis.
int nu_generic(const MPoly& f, const SigmaPointRef& p);

/// lambda_{c, p} = mu_p(F_c) - nu_p for an exact rational c.
int lambda_at(const MPoly& f, const SigmaPointRef& p, const Rat& c);

/// Certified affine critical point data.
struct AffineCriticalPoint {
    ComplexBox x, y;   // original (unsheared) coordinates
    int mu = 0;        // local Milnor number
    ComplexBox value;  // f at the point
    int cluster = 0;   // index into the analysis clusters
};

struct AffineCriticalData {
    CriticalSystem system;  // sheared critical system (u = x, v = y)
    std::vector<AffineCriticalPoint> points;     // empty for parametric input
    std::vector<UniPoly> value_polys;            // exact D_C(s) per cluster
    int total_mu = 0;
};

/// All affine critical points with local Milnor numbers, certified boxes and
/// the exact per-cluster critical-value polynomials. Throws nonisolated_error
/// when gcd(f_x, f_y) is not constant. Parametric coefficients (t) are
/// accepted; boxes are then omitted.
AffineCriticalData affine_critical_points(const MPoly& f);

// ---------------------------------------------------------------------------
// Chart route at infinity (the charts F_c for all Sigma points at once).
// ---------------------------------------------------------------------------

/// One Sigma sub-cluster in one chart with its generic chart Milnor number.
struct ChartSite {
    bool x_chart = false;
    UniPoly cluster;  // s-free squarefree defining polynomial (x or y roots)
    int nu = 0;
};

struct ChartRoute {
    SigmaSet sigma_set;
    std::vector<ChartSite> sites;
    // per chart: the sheared symbolic pencil analysis
    struct ChartData {
        bool present = false;
        MPoly W;  // sheared chart polynomial, value variable s symbolic
        Shear shear;
        SystemAnalysis analysis;
        UniPoly content_s;  // s-content of the resultant (degeneration detector)
    };
    ChartData y_chart, x_chart;
    std::vector<Rat> probes_used;
};

/// Builds the chart route for a specialized (t-free) polynomial. `forbidden`
/// is the candidate defining polynomial of the critical values at infinity
/// (probe filter); start_slope lets callers retry past a shear that fails a
/// later per-value validation.
ChartRoute chart_route(const MPoly& f, const UniPoly* forbidden = nullptr, int start_slope = 0);

/// Sum over all Sigma points p and all values c in the cluster Q of
/// lambda_{c,p}, computed by the resultant aggregation over Q. Throws
/// analysis_failure when an affine critical strand collides with a Sigma
/// point over Q (caller rebuilds the route with the next slope).
int chart_lambda_sum(const ChartRoute& route, const UniPoly& value_cluster);

}  // namespace milnor
