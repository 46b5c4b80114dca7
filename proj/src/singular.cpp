#include "milnor/singular.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace milnor {

namespace {

const VarSet kXY{Var::x, Var::y};

ComplexBox cb_eval_unipoly(const UniPoly& p, const ComplexBox& z, long prec) {
    return cb_eval_poly(p.rational_coeff_values(), z, prec);
}

/// Interval evaluation of a rational-coefficient polynomial in up to two
/// variables at boxes.
ComplexBox cb_eval_mpoly(const MPoly& p, const std::map<Var, ComplexBox>& point, long prec) {
    ComplexBox acc = ComplexBox::point(Rat(0), Rat(0));
    for (const auto& [m, c] : p.terms()) {
        ComplexBox term = ComplexBox::point(c, Rat(0));
        for (int i = 0; i < kNumVars; ++i) {
            for (int k = 0; k < m.e[i]; ++k) {
                auto it = point.find(static_cast<Var>(i));
                if (it == point.end()) throw internal_error("cb_eval_mpoly: unassigned variable");
                term = cb_mul(term, it->second, prec);
            }
        }
        acc = cb_add(acc, term, prec);
    }
    return acc;
}

/// Splits `cluster` along the strata of a squarefree decomposition; returns
/// (piece, multiplicity) pairs covering the whole cluster; uncovered leftovers
/// come back with multiplicity 0.
std::vector<std::pair<UniPoly, int>> strata_split(const UniPoly& cluster,
                                                  const SquarefreeDecomposition& sf) {
    VarSet cv = cluster.coeff_vars();
    for (const auto& [factor, mult] : sf.factors) cv = cv.united(factor.coeff_vars());
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly remaining = cluster.promoted_coeffs(cv).normalized();
    for (const auto& [factor, mult] : sf.factors) {
        if (remaining.degree() == 0) break;
        if (factor.degree() == 0) continue;
        UniPoly g = gcd_uni(factor.promoted_coeffs(cv), remaining);
        if (g.degree() > 0) {
            out.emplace_back(g, mult);
            remaining = remaining.exact_div(g).normalized();
        }
    }
    if (remaining.degree() > 0) out.emplace_back(remaining, 0);
    return out;
}

MPoly constant_term(const MPoly& p, Var u, Var v) {
    MPoly r(p.vars());
    for (const auto& [m, c] : p.terms())
        if (m[u] == 0 && m[v] == 0) r.add_term(m, c);
    return r;
}

}  // namespace

UniPoly SigmaSet::product() const {
    if (clusters.empty()) return UniPoly();
    UniPoly acc = clusters[0].defining;
    for (size_t i = 1; i < clusters.size(); ++i) acc = acc * clusters[i].defining;
    return acc.normalized();
}

SigmaSet sigma(const MPoly& f) {
    int d = f.degree_in(kXY);
    if (d < 1) throw input_error("sigma: input constant in {x,y}");
    auto forms = f.degree_forms(kXY);
    MPoly fd = forms[0];
    MPoly fd1 = forms.size() > 1 ? forms[1] : MPoly(f.vars());
    const MPoly A = fd.partial(Var::x);
    const MPoly B = fd.partial(Var::y);
    const MPoly C = fd1;

    SigmaSet out;
    // chart y = 1: common roots in x of the dehomogenized forms
    UniPoly g;
    bool have = false;
    for (const MPoly* form : {&A, &B, &C}) {
        if (form->is_zero()) continue;  // a zero form imposes no condition
        MPoly deh = form->substituted(Var::y, Rat(1));
        UniPoly u = UniPoly::from_mpoly(deh.restricted(deh.vars().without(Var::y)), Var::x);
        if (!have) {
            g = u;
            have = true;
        } else {
            g = gcd_uni(g, u);
        }
        if (g.degree() == 0) break;
    }
    if (!have) throw internal_error("sigma: all defining forms vanish identically");
    if (g.degree() > 0)
        for (const auto& [factor, mult] : squarefree(g).factors)
            if (factor.degree() > 0) out.clusters.push_back(SigmaCluster{factor.normalized()});

    // the point (1:0:0) lies in Sigma iff y divides all three forms
    auto divisible_by_y = [](const MPoly& p) { return p.is_zero() || p.coeff_of(Var::y, 0).is_zero(); };
    out.has_x_point = divisible_by_y(A) && divisible_by_y(B) && divisible_by_y(C);

    for (const auto& c : out.clusters)
        out.degree_in_t = std::max(out.degree_in_t, c.defining.to_mpoly().degree_in(Var::t));
    return out;
}

PlaneGerm infinity_chart(const MPoly& f, const SigmaPointRef& p, const Rat& c) {
    PlaneGerm g = infinity_chart_symbolic(f, p);
    MPoly spec = g.poly.substituted(Var::s, c);
    g.poly = spec.restricted(spec.vars().without(Var::s));
    return g;
}

PlaneGerm infinity_chart_symbolic(const MPoly& f, const SigmaPointRef& p) {
    int d = f.degree_in(kXY);
    if (d < 1) throw input_error("infinity_chart: input constant in {x,y}");
    MPoly fbar = f.homogenized(kXY, Var::x0);
    VarSet vars = fbar.vars();
    vars.add(Var::s);
    MPoly x0d = MPoly::variable(vars, Var::x0).pow(static_cast<unsigned>(d));
    PlaneGerm germ;
    if (p.x_chart) {
        MPoly w = fbar.promoted(vars).substituted(Var::x, Rat(1));
        germ.poly = w - MPoly::variable(vars, Var::s) * x0d;
        germ.poly = germ.poly.restricted(germ.poly.vars().without(Var::x));
        germ.u = Var::y;
        germ.v = Var::x0;
    } else {
        MPoly w = fbar.promoted(vars).substituted(Var::y, Rat(1));
        if (p.alpha != 0) {
            MPoly shift = MPoly::variable(vars, Var::x) + MPoly::constant(vars, p.alpha);
            w = w.substituted(Var::x, shift);
        }
        germ.poly = w - MPoly::variable(vars, Var::s) * x0d;
        germ.poly = germ.poly.restricted(germ.poly.vars().without(Var::y));
        germ.u = Var::x;
        germ.v = Var::x0;
    }
    return germ;
}

LocalMilnorResult local_milnor(const PlaneGerm& germ) {
    const MPoly& g = germ.poly;
    if (g.degree_in(VarSet{germ.u, germ.v}) < 1)
        throw input_error("local_milnor: germ constant in its local variables");
    if (!constant_term(g, germ.u, germ.v).is_zero())
        throw input_error("local_milnor: germ does not vanish at the base point");
    MPoly gu = g.partial(germ.u), gv = g.partial(germ.v);
    bool grad_zero = constant_term(gu, germ.u, germ.v).is_zero() &&
                     constant_term(gv, germ.u, germ.v).is_zero();
    if (!grad_zero)
        return LocalMilnorResult{0, Shear{germ.v, germ.u, Rat(0)}, "smooth at the base point"};

    bool parametric = g.degree_in(Var::t) > 0 || g.degree_in(Var::s) > 0;
    CriticalSystem cs = analyze_critical_points(g, germ.u, germ.v, parametric);

    const SystemCluster* origin_cluster = nullptr;
    for (const auto& cl : cs.analysis.clusters)
        if (cl.cluster.evaluated_at(Rat(0)).is_zero()) {
            origin_cluster = &cl;
            break;
        }
    if (!origin_cluster)
        throw internal_error("local_milnor: base point lost by the analysis");
    if (!origin_cluster->v_num.evaluated_at(Rat(0)).is_zero())
        throw internal_error("local_milnor: point above the base coordinate is not the base point");

    std::ostringstream cert;
    cert << "vanishing order " << origin_cluster->ord << " of Res at the base coordinate; "
         << "leading coefficient " << cs.leading.str() << " after shear " << cs.shear.str()
         << " (no intersection at infinity); one point above each of "
         << cs.analysis.clusters.size() << " separated cluster(s); total multiplicity "
         << cs.analysis.total_multiplicity() << " = deg Res";
    return LocalMilnorResult{origin_cluster->ord, cs.shear, cert.str()};
}

AffineCriticalData affine_critical_points(const MPoly& f) {
    if (f.degree_in(kXY) < 1) throw input_error("affine critical points: constant input");
    AffineCriticalData out;
    bool parametric = f.degree_in(Var::t) > 0;
    out.system = analyze_critical_points(f, Var::x, Var::y, parametric);
    const auto& an = out.system.analysis;
    for (const auto& cl : an.clusters) {
        out.value_polys.push_back(cluster_value_poly(cl, out.system.g, Var::x, Var::y, Var::s));
        out.total_mu += cl.ord * cl.cluster.degree();
    }
    if (parametric) return out;

    long prec = 160;
    for (size_t ci = 0; ci < an.clusters.size(); ++ci) {
        const auto& cl = an.clusters[static_cast<size_t>(ci)];
        AlgebraicValueSet xs = isolate(cl.cluster, Rat(1, 1 << 24));
        for (const auto& rb : xs.boxes) {
            ComplexBox xi = rb.box();
            ComplexBox den = cb_eval_unipoly(cl.v_den, xi, prec);
            AlgebraicValueSet narrowed = xs;
            Rat p2(1, 1 << 24);
            while (den.contains_zero()) {
                p2 /= 1024;
                narrowed = refine(narrowed, p2);
                bool found = false;
                for (const auto& nb : narrowed.boxes)
                    if (rat_abs(nb.cre - rb.cre) <= rb.radius && rat_abs(nb.cim - rb.cim) <= rb.radius) {
                        xi = nb.box();
                        found = true;
                        break;
                    }
                if (!found) throw internal_error("affine critical points: lost a root while refining");
                den = cb_eval_unipoly(cl.v_den, xi, prec);
            }
            ComplexBox num = cb_eval_unipoly(cl.v_num, xi, prec);
            ComplexBox eta = cb_div(num, den, prec);
            AffineCriticalPoint pt;
            // unshear: the analyzed system lives in g(x, y) = f(x + a y, y)
            ComplexBox slope = ComplexBox::point(out.system.shear.slope, Rat(0));
            pt.x = cb_add(xi, cb_mul(slope, eta, prec), prec);
            pt.y = eta;
            pt.mu = cl.ord;
            pt.cluster = static_cast<int>(ci);
            pt.value = cb_eval_mpoly(f, {{Var::x, pt.x}, {Var::y, pt.y}}, prec);
            out.points.push_back(pt);
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const AffineCriticalPoint& a, const AffineCriticalPoint& b) {
                  if (a.x.re.lo != b.x.re.lo) return a.x.re.lo < b.x.re.lo;
                  return a.x.im.lo < b.x.im.lo;
              });
    return out;
}

// ---------------------------------------------------------------------------
// Chart route.
// ---------------------------------------------------------------------------

namespace {

MPoly chart_polynomial(const MPoly& f, bool x_chart) {
    int d = f.degree_in(kXY);
    MPoly fbar = f.homogenized(kXY, Var::x0);
    VarSet vars = fbar.vars();
    vars.add(Var::s);
    MPoly x0d = MPoly::variable(vars, Var::x0).pow(static_cast<unsigned>(d));
    MPoly w = fbar.promoted(vars).substituted(x_chart ? Var::x : Var::y, Rat(1));
    MPoly W = w - MPoly::variable(vars, Var::s) * x0d;
    return W.restricted(W.vars().without(x_chart ? Var::x : Var::y));
}

/// Specialized chart analysis at a rational pencil value.
CriticalSystem chart_at_value(const MPoly& W, Var u, const Rat& c) {
    MPoly Wc = W.substituted(Var::s, c);
    Wc = Wc.restricted(Wc.vars().without(Var::s));
    return analyze_critical_points(Wc, u, Var::x0, false);
}

/// Multiplicity of the resultant at the roots of an s-free cluster; must be
/// uniform across the cluster (conjugate points share their local data).
int uniform_ord(const UniPoly& cluster, const UniPoly& res) {
    auto pieces = strata_split(cluster, squarefree(res));
    if (pieces.size() != 1)
        throw inconsistency_error("chart route: non-uniform multiplicity across a cluster");
    return pieces[0].second;
}

}  // namespace

ChartRoute chart_route(const MPoly& f, const UniPoly* forbidden, int start_slope) {
    if (f.degree_in(Var::t) > 0)
        throw input_error("chart route: parametric input (specialize first)");
    ChartRoute route;
    route.sigma_set = sigma(f);
    if (route.sigma_set.empty()) return route;

    struct ChartSpec {
        bool x_chart;
        std::vector<UniPoly> sigma_clusters;
    };
    std::vector<ChartSpec> charts;
    if (!route.sigma_set.clusters.empty()) {
        ChartSpec cs;
        cs.x_chart = false;
        for (const auto& c : route.sigma_set.clusters) cs.sigma_clusters.push_back(c.defining);
        charts.push_back(std::move(cs));
    }
    if (route.sigma_set.has_x_point) {
        ChartSpec cs;
        cs.x_chart = true;
        VarSet yv{Var::y};
        cs.sigma_clusters.push_back(
            UniPoly(Var::y, VarSet{}, {MPoly(VarSet{}), MPoly::constant(VarSet{}, 1)}));
        charts.push_back(std::move(cs));
    }

    for (const auto& spec : charts) {
        Var u = spec.x_chart ? Var::y : Var::x;
        MPoly W0 = chart_polynomial(f, spec.x_chart);
        ChartRoute::ChartData data;
        bool done = false;
        std::string last = "chart analysis found no admissible shear";
        for (int k = start_slope; k < start_slope + 64 && !done; ++k) {
            int a = (k + 1) / 2 * ((k % 2) ? 1 : -1);
            if (k == 0) a = 0;
            Shear sh{Var::x0, u, Rat(a)};
            MPoly W = W0.sheared(sh);
            int d = f.degree_in(kXY);
            if (W.degree_in(Var::x0) != d) continue;
            MPoly lead = W.coeff_of(Var::x0, static_cast<unsigned>(d));
            if (lead.is_zero() || lead.degree_in(u) > 0 || lead.degree_in(Var::x0) > 0) continue;
            UniPoly A = UniPoly::from_mpoly(W.partial(u), Var::x0);
            UniPoly B = UniPoly::from_mpoly(W.partial(Var::x0), Var::x0);
            try {
                data.analysis = analyze_system(A, B);
                data.W = W;
                data.shear = sh;
                data.present = true;
                data.content_s = UniPoly::from_mpoly(data.analysis.res.content(), Var::s);
                done = true;
            } catch (const analysis_failure& e) {
                last = e.what();
            }
        }
        if (!done) throw internal_error(std::string("chart route: slope budget exhausted: ") + last);

        // sites: intersect the Sigma clusters with the analysis clusters
        for (const auto& sigma_cluster : spec.sigma_clusters) {
            UniPoly remaining = sigma_cluster.normalized();
            for (const auto& cl : data.analysis.clusters) {
                if (remaining.degree() == 0) break;
                UniPoly g = gcd_uni(remaining, cl.cluster).restricted_coeffs();
                if (g.degree() == 0) continue;
                ChartSite site;
                site.x_chart = spec.x_chart;
                site.cluster = g.normalized();
                site.nu = cl.ord;
                route.sites.push_back(site);
                remaining = remaining.exact_div(g).normalized().restricted_coeffs();
            }
            if (remaining.degree() > 0)
                throw inconsistency_error(
                    "chart route: a Sigma point is not critical for the generic pencil value");
        }
        if (spec.x_chart)
            route.x_chart = data;
        else
            route.y_chart = data;
    }

    // probe validation: two exact rational pencil values away from the
    // candidate critical values at infinity must reproduce every site's nu
    int found = 0;
    for (int k = 1; k <= 64 && found < 2; ++k) {
        Rat c((k + 1) / 2 * ((k % 2) ? 1 : -1));
        if (forbidden && !forbidden->is_zero() && forbidden->evaluated_at(c).is_zero()) continue;
        bool ok = true;
        for (const ChartRoute::ChartData* data : {&route.y_chart, &route.x_chart}) {
            if (!data->present || !ok) continue;
            if (!data->content_s.is_zero() && data->content_s.degree() >= 0 &&
                data->content_s.evaluated_at(c).is_zero())
                ok = false;
            // the pencil value must keep the chart leading coefficient nonzero
            MPoly lc = UniPoly::from_mpoly(data->W, Var::x0).lc();
            if (UniPoly::from_mpoly(lc, Var::s).evaluated_at(c).is_zero()) ok = false;
        }
        if (!ok) continue;
        for (const auto& site : route.sites) {
            const auto& data = site.x_chart ? route.x_chart : route.y_chart;
            Var u = site.x_chart ? Var::y : Var::x;
            CriticalSystem at_c = chart_at_value(data.W, u, c);
            int mu = uniform_ord(site.cluster, at_c.analysis.res);
            if (mu != site.nu)
                throw inconsistency_error(
                    "chart route: probe value disagrees with the generic pencil multiplicity "
                    "(probe " +
                    rat_to_string(c) + ": " + std::to_string(mu) + " vs " +
                    std::to_string(site.nu) + ")");
        }
        route.probes_used.push_back(c);
        ++found;
    }
    if (found < 2) throw internal_error("chart route: probe budget exhausted");
    return route;
}

int chart_lambda_sum(const ChartRoute& route, const UniPoly& value_cluster) {
    if (value_cluster.degree() < 1) throw internal_error("chart_lambda_sum: empty value cluster");
    // Sum over values c in the cluster and Sigma points p of
    // mu_p(F_c) - nu_p, through the vanishing order of the aggregated
    // resultant Res_s(Q, R(u, s)) = prod_c R(u, c) along each site.
    //
    // Critical strands of the pencil that merge into a Sigma point at some c
    // in the cluster are exactly the lambda contributions and are counted by
    // the order. A strand crossing the same u-coordinate with x0 != 0 would
    // inflate the order; such a crossing survives only finitely many chart
    // shears, and it only ever inflates, so the caller retries the shear when
    // this sum exceeds the discriminant route's value.
    int total = 0;
    for (const ChartRoute::ChartData* data : {&route.y_chart, &route.x_chart}) {
        if (!data->present) continue;
        bool x_chart = (data == &route.x_chart);
        // degenerate pencil values inside the cluster are not supported
        if (data->content_s.degree() > 0) {
            UniPoly g = gcd_uni(data->content_s, value_cluster);
            if (g.degree() > 0)
                throw inconsistency_error("chart route: pencil degenerates on a critical value");
        }
        UniPoly Rs = UniPoly::from_mpoly(data->analysis.res.to_mpoly(), Var::s);
        UniPoly Q = value_cluster.promoted_coeffs(value_cluster.coeff_vars().united(Rs.coeff_vars()));
        UniPoly RQ = UniPoly::from_mpoly(resultant(Q, Rs), data->analysis.u);
        if (RQ.is_zero()) throw inconsistency_error("chart route: aggregated resultant vanished");
        auto strata = squarefree(RQ);
        for (const auto& site : route.sites) {
            if (site.x_chart != x_chart) continue;
            int ord_sum = 0;
            for (const auto& [factor, mult] : strata.factors) {
                if (factor.degree() == 0) continue;
                UniPoly g = gcd_uni(factor, site.cluster);
                ord_sum += mult * g.degree();
            }
            int contribution = ord_sum - site.cluster.degree() * value_cluster.degree() * site.nu;
            if (contribution < 0)
                throw inconsistency_error("chart route: site order below the generic level");
            total += contribution;
        }
    }
    return total;
}

namespace {

/// Candidate defining polynomial for the critical values at infinity: the
/// squarefree part of the leading x-coefficient of the primitive part of
/// Disc_y(g - s) for the monic-sheared g.
UniPoly binf_candidate(const MPoly& f) {
    auto monic = make_y_monic(f);
    VarSet vars = monic.poly.vars();
    vars.add(Var::s);
    MPoly pencil = monic.poly.promoted(vars) - MPoly::variable(vars, Var::s);
    UniPoly in_y = UniPoly::from_mpoly(pencil, Var::y);
    MPoly delta = discriminant(in_y);
    UniPoly delta_x = UniPoly::from_mpoly(delta, Var::x);
    UniPoly pp = delta_x.primitive_part();
    UniPoly q1 = UniPoly::from_mpoly(pp.lc(), Var::s);
    if (q1.degree() < 1) return UniPoly();
    return squarefree(q1).squarefree_part(Var::s, q1.coeff_vars());
}

const ChartSite* find_site(const ChartRoute& route, const SigmaPointRef& p) {
    for (const auto& site : route.sites) {
        if (site.x_chart != p.x_chart) continue;
        if (p.x_chart) return &site;
        if (site.cluster.evaluated_at(p.alpha).is_zero()) return &site;
    }
    return nullptr;
}

}  // namespace

int nu_generic(const MPoly& f, const SigmaPointRef& p) {
    UniPoly q1 = binf_candidate(f);
    ChartRoute route = chart_route(f, q1.degree() > 0 ? &q1 : nullptr);
    const ChartSite* site = find_site(route, p);
    if (!site) throw input_error("nu_generic: the point is not in Sigma");
    return site->nu;
}

int lambda_at(const MPoly& f, const SigmaPointRef& p, const Rat& c) {
    UniPoly q1 = binf_candidate(f);
    ChartRoute route = chart_route(f, q1.degree() > 0 ? &q1 : nullptr);
    const ChartSite* site = find_site(route, p);
    if (!site) throw input_error("lambda_at: the point is not in Sigma");
    const auto& data = p.x_chart ? route.x_chart : route.y_chart;
    Var u = p.x_chart ? Var::y : Var::x;
    CriticalSystem at_c = chart_at_value(data.W, u, c);
    // order of the specialized resultant at the point's coordinate
    Rat alpha = p.x_chart ? Rat(0) : p.alpha;
    int mu = -1;
    for (const auto& [factor, mult] : squarefree(at_c.analysis.res).factors)
        if (factor.degree() > 0 && factor.evaluated_at(alpha).is_zero()) {
            mu = mult;
            break;
        }
    if (mu < 0) mu = 0;  // the point is not critical for this pencil value
    int lam = mu - site->nu;
    if (lam < 0) throw inconsistency_error("lambda_at: below the generic Milnor number");
    return lam;
}

}  // namespace milnor
