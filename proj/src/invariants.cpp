#include "milnor/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {

namespace {
const VarSet kXY{Var::x, Var::y};
}

UniPoly DeltaPencil::q(int i) const {
    if (i < 1 || i > k + 1) throw internal_error("DeltaPencil::q: index out of range");
    MPoly c = delta_x.coeff(k - (i - 1));
    return UniPoly::from_mpoly(c, Var::s);
}

DeltaPencil delta_pencil(const MPoly& f, bool allow_parametric_leading, int start_slope) {
    int d = f.degree_in(kXY);
    if (d < 1) throw input_error("constant polynomial");
    MonicShearResult monic = [&] {
        if (start_slope == 0) return make_y_monic(f, !allow_parametric_leading);
        // skip the first admissible slopes (shear-independence checks)
        for (int k = start_slope; k < start_slope + 64; ++k) {
            int a = (k + 1) / 2 * ((k % 2) ? 1 : -1);
            Shear sh{Var::y, Var::x, Rat(a)};
            MPoly g = f.sheared(sh);
            if (g.degree_in(Var::y) != d) continue;
            MPoly lead = g.coeff_of(Var::y, static_cast<unsigned>(d));
            if (lead.is_zero() || lead.degree_in(Var::x) > 0 || lead.degree_in(Var::y) > 0) continue;
            if (!allow_parametric_leading && !lead.is_constant()) continue;
            return MonicShearResult{g, sh, lead};
        }
        throw internal_error("delta_pencil: no admissible shear past the requested slope");
    }();

    VarSet vars = monic.poly.vars();
    vars.add(Var::s);
    MPoly pencil = monic.poly.promoted(vars) - MPoly::variable(vars, Var::s);
    UniPoly in_y = UniPoly::from_mpoly(pencil, Var::y);
    MPoly delta = discriminant(in_y);

    DeltaPencil out;
    out.shear = monic.shear;
    out.leading = monic.leading;
    UniPoly delta_x = UniPoly::from_mpoly(delta, Var::x);
    MPoly content = delta_x.content();
    if (content.degree_in(Var::s) > 0)
        throw inconsistency_error(
            "delta pencil: the discriminant has s-dependent content (a fiber is non-reduced)");
    out.content = content;
    out.delta_x = delta_x.primitive_part();
    out.k = std::max(out.delta_x.degree(), 0);
    return out;
}

std::vector<ValueCluster> b_infinity_clusters(const DeltaPencil& dp) {
    std::vector<ValueCluster> out;
    UniPoly q1 = dp.q(1);
    if (q1.degree() < 1) return out;  // leading coefficient has no s-roots
    UniPoly base = squarefree(q1.primitive_part()).squarefree_part(Var::s, q1.coeff_vars());
    if (base.degree() < 1) return out;
    std::vector<UniPoly> tests;
    for (int i = 2; i <= dp.k + 1; ++i) tests.push_back(dp.q(i));
    auto split = gcd_split(base, tests);
    for (const auto& piece : split) {
        ValueCluster vc;
        vc.defining = piece.factor.restricted_coeffs();
        int lambda_c = -1;
        for (size_t j = 0; j < piece.vanishes.size(); ++j)
            if (!piece.vanishes[j]) {
                lambda_c = static_cast<int>(j) + 1;  // q_{j+2} is the first nonzero
                break;
            }
        if (lambda_c < 0)
            throw inconsistency_error("b_infinity: all pencil coefficients vanish on a cluster");
        vc.lambda_c = lambda_c;

        // independent characterization: lambda_c = k - deg_x Delta(x, c);
        // reduce every coefficient modulo the cluster and find the degree
        int deg_drop_lambda = -1;
        for (int i = 1; i <= dp.k + 1; ++i) {
            UniPoly qi = dp.q(i);
            bool vanishes_on_cluster =
                qi.is_zero() || UniPoly::prem(qi, vc.defining).is_zero();
            if (!vanishes_on_cluster) {
                deg_drop_lambda = i - 1;  // deg_x Delta(x,c) = k - (i - 1)
                break;
            }
        }
        if (deg_drop_lambda != vc.lambda_c)
            throw inconsistency_error(
                "b_infinity: vanishing pattern and degree drop disagree (" +
                std::to_string(vc.lambda_c) + " vs " + std::to_string(deg_drop_lambda) + ")");
        out.push_back(std::move(vc));
    }
    std::sort(out.begin(), out.end(), [](const ValueCluster& a, const ValueCluster& b) {
        if (a.defining.degree() != b.defining.degree())
            return a.defining.degree() < b.defining.degree();
        return a.defining.to_mpoly().str() < b.defining.to_mpoly().str();
    });
    return out;
}

std::vector<ValueCluster> b_affine_clusters(const AffineCriticalData& data) {
    std::vector<ValueCluster> out;
    if (data.system.analysis.clusters.empty()) return out;
    VarSet sv = data.value_polys[0].coeff_vars();
    UniPoly V(Var::s, sv, {MPoly::constant(sv, 1)});
    for (const auto& vp : data.value_polys) V = V * vp;
    UniPoly base = squarefree(V).squarefree_part(Var::s, V.coeff_vars());
    if (base.degree() < 1) throw internal_error("b_affine: empty value polynomial");

    // tests: multiplicity strata of each cluster's value polynomial
    struct Stratum {
        size_t cluster;
        int mult;
    };
    std::vector<UniPoly> tests;
    std::vector<Stratum> strata;
    for (size_t ci = 0; ci < data.value_polys.size(); ++ci) {
        auto sf = squarefree(data.value_polys[ci]);
        for (const auto& [factor, mult] : sf.factors) {
            if (factor.degree() < 1) continue;
            tests.push_back(factor);
            strata.push_back({ci, mult});
        }
    }
    auto split = gcd_split(base, tests);
    for (const auto& piece : split) {
        ValueCluster vc;
        vc.defining = piece.factor.restricted_coeffs();
        int mu_c = 0;
        for (size_t j = 0; j < piece.vanishes.size(); ++j) {
            if (!piece.vanishes[j]) continue;
            const auto& cl = data.system.analysis.clusters[strata[j].cluster];
            mu_c += cl.ord * strata[j].mult;
        }
        if (mu_c <= 0) throw inconsistency_error("b_affine: cluster without critical points");
        vc.mu_c = mu_c;
        out.push_back(std::move(vc));
    }
    std::sort(out.begin(), out.end(), [](const ValueCluster& a, const ValueCluster& b) {
        if (a.defining.degree() != b.defining.degree())
            return a.defining.degree() < b.defining.degree();
        return a.defining.to_mpoly().str() < b.defining.to_mpoly().str();
    });
    return out;
}

namespace {

AlgebraicValueSet isolate_value_clusters(const std::vector<ValueCluster>& clusters,
                                         const Rat& precision) {
    std::vector<std::pair<UniPoly, int>> factors;
    for (const auto& vc : clusters) factors.emplace_back(vc.defining, 1);
    return isolate_clusters(factors, Var::s, precision);
}

std::vector<ValueCluster> merge_value_clusters(std::vector<ValueCluster> aff,
                                               std::vector<ValueCluster> inf) {
    std::vector<ValueCluster> merged;
    for (auto& bi : inf) {
        UniPoly remaining = bi.defining;
        for (auto& ai : aff) {
            if (remaining.degree() == 0) break;
            if (ai.defining.degree() == 0) continue;
            UniPoly g = gcd_uni(ai.defining, remaining).restricted_coeffs();
            if (g.degree() == 0) continue;
            ValueCluster both;
            both.defining = g.normalized();
            both.mu_c = ai.mu_c;
            both.lambda_c = bi.lambda_c;
            merged.push_back(both);
            remaining = remaining.exact_div(g).normalized().restricted_coeffs();
            ai.defining = ai.defining.exact_div(g).normalized().restricted_coeffs();
        }
        if (remaining.degree() > 0) {
            ValueCluster only_inf;
            only_inf.defining = remaining;
            only_inf.lambda_c = bi.lambda_c;
            merged.push_back(only_inf);
        }
    }
    for (auto& ai : aff)
        if (ai.defining.degree() > 0) merged.push_back(ai);
    std::sort(merged.begin(), merged.end(), [](const ValueCluster& a, const ValueCluster& b) {
        if (a.defining.degree() != b.defining.degree())
            return a.defining.degree() < b.defining.degree();
        return a.defining.to_mpoly().str() < b.defining.to_mpoly().str();
    });
    return merged;
}

}  // namespace

InvariantRecord invariant_record(const MPoly& f, const Rat& precision) {
    if (f.degree_in(Var::t) > 0)
        throw input_error("invariant_record: family input (use specialize or the family pipeline)");
    InvariantRecord rec;
    rec.poly = f;
    rec.d = f.degree_in(kXY);
    if (rec.d < 1) throw input_error("constant polynomial");

    // the affine analysis first: it rejects non-isolated singularities, which
    // the pencil's content normalization otherwise reports as an inconsistency
    rec.critical_points = affine_critical_points(f);

    rec.pencil = delta_pencil(f);
    rec.shear_used = rec.pencil.shear;
    rec.k = rec.pencil.k;

    rec.b_aff.clusters = b_affine_clusters(rec.critical_points);
    for (const auto& vc : rec.b_aff.clusters) rec.b_aff.mu_total += vc.mu_c * vc.value_count();
    rec.mu = rec.b_aff.mu_total;
    if (rec.mu != rec.critical_points.total_mu)
        throw inconsistency_error("mu additivity: value clusters vs critical points");

    rec.b_inf.clusters = b_infinity_clusters(rec.pencil);
    for (const auto& vc : rec.b_inf.clusters)
        rec.b_inf.lambda_total += vc.lambda_c * vc.value_count();
    rec.lambda = rec.b_inf.lambda_total;
    {
        UniPoly q1 = rec.pencil.q(1);
        if (q1.degree() >= 1)
            rec.b_inf.q1_squarefree =
                squarefree(q1.primitive_part()).squarefree_part(Var::s, q1.coeff_vars());
    }

    if (rec.k != rec.mu + rec.lambda + rec.d - 1) {
        std::ostringstream os;
        os << "k-identity violated: k = " << rec.k << " but mu + lambda + d - 1 = " << rec.mu
           << " + " << rec.lambda << " + " << rec.d << " - 1";
        throw inconsistency_error(os.str());
    }
    rec.wedge = rec.mu + rec.lambda;

    // chart route cross-check: per cluster at infinity the chart lambda sum
    // must reproduce lambda_c * (number of values in the cluster). A strand
    // coincidence can only inflate the chart sum and survives only finitely
    // many chart shears, so mismatches retry the shear before they count as a
    // route disagreement.
    {
        const int budget = 10;
        std::string last_mismatch;
        bool checked = false;
        for (int start = 0; start < budget && !checked; ++start) {
            ChartRoute route;
            try {
                route = chart_route(
                    f, rec.b_inf.q1_squarefree.degree() > 0 ? &rec.b_inf.q1_squarefree : nullptr,
                    start);
            } catch (const analysis_failure& e) {
                last_mismatch = e.what();
                continue;
            }
            bool all_match = true;
            int chart_lambda_total = 0;
            for (const auto& vc : rec.b_inf.clusters) {
                int chart_sum = chart_lambda_sum(route, vc.defining);
                if (chart_sum != vc.lambda_c * vc.value_count()) {
                    std::ostringstream os;
                    os << "chart route gives " << chart_sum << " for a cluster where the "
                       << "discriminant route gives " << vc.lambda_c * vc.value_count();
                    last_mismatch = os.str();
                    all_match = false;
                    break;
                }
                chart_lambda_total += chart_sum;
            }
            if (!all_match) continue;
            if (chart_lambda_total != rec.lambda)
                throw inconsistency_error("route disagreement: total lambda at infinity");
            rec.sigma_point_count = route.sigma_set.point_count();
            rec.chart_probes = route.probes_used;
            checked = true;
        }
        if (!checked)
            throw inconsistency_error("route disagreement (all chart shears): " + last_mismatch);
    }

    rec.b_clusters = merge_value_clusters(rec.b_aff.clusters, rec.b_inf.clusters);
    rec.b_aff.values = isolate_value_clusters(rec.b_aff.clusters, precision);
    rec.b_inf.values = isolate_value_clusters(rec.b_inf.clusters, precision);
    rec.b = isolate_value_clusters(rec.b_clusters, precision);
    return rec;
}

EulerCheckResult euler_check(const InvariantRecord& rec, size_t cluster_index) {
    if (cluster_index >= rec.b_clusters.size()) throw input_error("euler_check: no such cluster");
    const ValueCluster& vc = rec.b_clusters[cluster_index];

    // recompute lambda_c by the degree drop of Delta modulo the cluster
    int lambda_c = 0;
    for (int i = 1; i <= rec.k + 1; ++i) {
        UniPoly qi = rec.pencil.q(i);
        bool vanishes = qi.is_zero() || UniPoly::prem(qi, vc.defining).is_zero();
        if (!vanishes) {
            lambda_c = i - 1;
            break;
        }
    }
    // recompute mu_c from the critical-point strata
    int mu_c = 0;
    for (size_t ci = 0; ci < rec.critical_points.value_polys.size(); ++ci) {
        auto sf = squarefree(rec.critical_points.value_polys[ci]);
        for (const auto& [factor, mult] : sf.factors) {
            if (factor.degree() < 1) continue;
            UniPoly g = gcd_uni(factor, vc.defining);
            if (g.degree() == vc.defining.degree())
                mu_c += rec.critical_points.system.analysis.clusters[ci].ord * mult;
            else if (g.degree() > 0)
                return EulerCheckResult::violated;  // cluster straddles a stratum
        }
    }
    long chi_recomputed = 1 - (rec.mu + rec.lambda) + mu_c + lambda_c;
    long chi_recorded = 1 - rec.wedge + vc.mu_c + vc.lambda_c;
    return (chi_recomputed == chi_recorded && mu_c == vc.mu_c && lambda_c == vc.lambda_c)
               ? EulerCheckResult::verified
               : EulerCheckResult::violated;
}

}  // namespace milnor
