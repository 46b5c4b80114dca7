#include "milnor/fiber.hpp"

#include <algorithm>

namespace milnor {

namespace {

Rat binom(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
    return r;
}

struct ChainContext {
    UniPoly P, Q;                // deg_v P > deg_v Q, lc_v(P) coordinate-free
    std::vector<UniPoly> cache;  // S_j, lazily computed

    const UniPoly& subres(int j) {
        if (cache.empty()) cache.assign(static_cast<size_t>(P.degree()) + 1, UniPoly());
        auto& slot = cache[static_cast<size_t>(j)];
        if (slot.coeffs().empty()) slot = subresultant(P, Q, j);
        return slot;
    }
};

/// The v-coordinate pair only matters as a ratio on the cluster: reduce both
/// parts modulo the cluster polynomial, preserving the ratio (pseudo-division
/// multipliers are balanced for parametric clusters), and strip the shared
/// rational content.
void reduce_v_mod_cluster(SystemCluster& cl) {
    const UniPoly& C = cl.cluster;
    if (C.degree() < 1) return;
    if (C.rational_coeffs() && cl.v_num.rational_coeffs() && cl.v_den.rational_coeffs()) {
        UniPoly Cm = C.normalized();
        cl.v_num = UniPoly::rem_rational(cl.v_num, Cm);
        cl.v_den = UniPoly::rem_rational(cl.v_den, Cm);
    } else {
        int a_num = std::max(cl.v_num.degree() - C.degree() + 1, 0);
        int a_den = std::max(cl.v_den.degree() - C.degree() + 1, 0);
        UniPoly rn = UniPoly::prem(cl.v_num, C);
        UniPoly rd = UniPoly::prem(cl.v_den, C);
        MPoly lc = C.lc();
        MPoly mult_n = MPoly::constant(lc.vars(), 1);
        MPoly mult_d = MPoly::constant(lc.vars(), 1);
        for (int i = 0; i < a_den; ++i) mult_n = mult_n * lc;
        for (int i = 0; i < a_num; ++i) mult_d = mult_d * lc;
        cl.v_num = rn.scaled(mult_n);
        cl.v_den = rd.scaled(mult_d);
    }
    // strip the common rational content
    Rat cn(0), cd(0);
    auto content_of = [](const UniPoly& p) {
        Rat g(0);
        for (const auto& c : p.coeffs())
            for (const auto& [m, q] : c.terms()) {
                Rat a = rat_abs(q);
                if (g == 0)
                    g = a;
                else {
                    Int num;
                    mpz_gcd(num.get_mpz_t(), g.get_num().get_mpz_t(), a.get_num().get_mpz_t());
                    Int den;
                    mpz_lcm(den.get_mpz_t(), g.get_den().get_mpz_t(), a.get_den().get_mpz_t());
                    g = Rat(num, den);
                    g.canonicalize();
                }
            }
        return g;
    };
    cn = content_of(cl.v_num);
    cd = content_of(cl.v_den);
    if (cn != 0 && cd != 0) {
        Int num;
        mpz_gcd(num.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
        Int den;
        mpz_lcm(den.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
        Rat g(num, den);
        g.canonicalize();
        if (g != 0 && g != 1) {
            cl.v_num = cl.v_num.scaled(Rat(1 / g));
            cl.v_den = cl.v_den.scaled(Rat(1 / g));
        }
    }
}

}  // namespace

SystemAnalysis analyze_system(const UniPoly& A, const UniPoly& B) {
    if (A.main() != B.main()) throw internal_error("analyze_system: main variable mismatch");
    Var v = A.main();
    if (B.degree() < 1) throw internal_error("analyze_system: deg_v B must be positive");
    Var u = Var::x;
    {
        VarSet cv = A.coeff_vars().united(B.coeff_vars());
        bool found = false;
        for (Var cand : {Var::x, Var::y, Var::x0}) {
            if (cand == v) continue;
            if (cv.contains(cand)) {
                if (found) throw internal_error("analyze_system: ambiguous base variable");
                u = cand;
                found = true;
            }
        }
        if (!found) throw internal_error("analyze_system: no base variable in coefficients");
    }
    const MPoly lcB = B.lc();
    if (lcB.degree_in(u) > 0 || lcB.degree_in(v) > 0)
        throw internal_error("analyze_system: lc_v(B) must be free of the coordinates");
    if (A.is_zero()) throw nonisolated_error("critical locus contains a curve (zero partial)");

    SystemAnalysis out;
    out.u = u;
    out.v = v;

    UniPoly R = UniPoly::from_mpoly(resultant(A, B), u);
    if (R.is_zero()) throw nonisolated_error("resultant vanishes identically: non-isolated system");
    out.res = R;
    if (R.degree() == 0) return out;  // no common zeros

    // chain setup: P = B keeps its degree under specialization, Q = A reduced
    // below deg P with gcd preserved (lc_v(P) is coordinate-free)
    ChainContext ctx;
    ctx.P = B;
    ctx.Q = A;
    VarSet uv = A.coeff_vars().united(B.coeff_vars());
    while (!ctx.Q.is_zero() && ctx.Q.degree() >= ctx.P.degree()) {
        int shift = ctx.Q.degree() - ctx.P.degree();
        std::vector<MPoly> cc(static_cast<size_t>(ctx.Q.degree()) + 1, MPoly(uv));
        for (int i = 0; i <= ctx.P.degree(); ++i)
            cc[static_cast<size_t>(i + shift)] = ctx.P.coeff(i).promoted(uv) * ctx.Q.lc().promoted(uv);
        ctx.Q = ctx.Q.scaled(lcB) - UniPoly(v, uv, cc);
    }
    bool q_ground = ctx.Q.degree() <= 0;
    int qd = q_ground ? 0 : ctx.Q.degree();

    auto sf = squarefree(R);
    for (const auto& [stratum, mult] : sf.factors) {
        if (stratum.degree() <= 0) continue;
        std::vector<UniPoly> sigma_tests;
        for (int j = 1; j <= qd; ++j)
            sigma_tests.push_back(UniPoly::from_mpoly(ctx.subres(j).coeff(j), u));
        auto split = gcd_split(stratum.normalized(), sigma_tests);
        for (const auto& piece : split) {
            SystemCluster cl;
            cl.cluster = piece.factor;
            cl.ord = mult;
            int e = 0;
            for (int j = 1; j <= qd; ++j)
                if (!piece.vanishes[static_cast<size_t>(j - 1)]) {
                    e = j;
                    break;
                }
            UniPoly Se;  // gcd of the specialized pair above the cluster
            if (e == 0) {
                e = ctx.P.degree();
                Se = ctx.P;
            } else {
                Se = ctx.subres(e);
            }
            cl.gcd_degree = e;

            MPoly sig_e = Se.coeff(e);
            MPoly sig_e1 = Se.coeff(e - 1);
            VarSet cvars = sig_e.vars();
            // one point above each root: S_e = sig_e (v - w)^e on the cluster,
            // w = -sig_e1 / (e sig_e); test the remaining coefficients
            for (int l = 0; l <= e - 2; ++l) {
                MPoly pow_den = MPoly::constant(cvars, 1);
                MPoly pow_num = MPoly::constant(cvars, 1);
                for (int k = 0; k < e - l; ++k) {
                    pow_den = pow_den * (sig_e * Rat(e));
                    pow_num = pow_num * sig_e1;
                }
                MPoly test = Se.coeff(l) * pow_den - sig_e * pow_num * binom(e, l);
                if (test.is_zero()) continue;
                UniPoly tu = UniPoly::from_mpoly(test, u);
                UniPoly gtest = gcd_uni(cl.cluster, tu);
                if (gtest.degree() != cl.cluster.degree())
                    throw analysis_failure("cluster has more than one point above a root");
            }
            cl.v_num = UniPoly::from_mpoly(-sig_e1, u);
            cl.v_den = UniPoly::from_mpoly(sig_e * Rat(e), u);
            reduce_v_mod_cluster(cl);
            out.clusters.push_back(std::move(cl));
        }
    }

    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const SystemCluster& a, const SystemCluster& b) {
                  if (a.cluster.degree() != b.cluster.degree())
                      return a.cluster.degree() < b.cluster.degree();
                  return a.cluster.to_mpoly().str() < b.cluster.to_mpoly().str();
              });

    if (out.total_multiplicity() != out.res.degree())
        throw analysis_failure("multiplicity bookkeeping does not cover the resultant degree");
    return out;
}

CriticalSystem analyze_critical_points(const MPoly& f, Var u, Var v, bool allow_parametric_leading,
                                       int slope_budget) {
    int d = f.degree_in(VarSet{u, v});
    if (d < 1) throw input_error("critical points: input constant in the coordinates");
    std::string last_failure = "no admissible shear found";
    for (int k = 0; k < slope_budget; ++k) {
        int a = (k + 1) / 2 * ((k % 2) ? 1 : -1);
        if (k == 0) a = 0;
        Shear sh{v, u, Rat(a)};
        MPoly g = f.sheared(sh);
        if (g.degree_in(v) != d) continue;
        MPoly lead = g.coeff_of(v, static_cast<unsigned>(d));
        if (lead.is_zero() || lead.degree_in(u) > 0 || lead.degree_in(v) > 0) continue;
        if (!allow_parametric_leading && !lead.is_constant()) continue;
        UniPoly A = UniPoly::from_mpoly(g.partial(u), v);
        UniPoly B = UniPoly::from_mpoly(g.partial(v), v);
        if (B.degree() < 1) {
            // g linear in v: g_v is a nonzero constant, no critical points
            CriticalSystem cs;
            cs.g = g;
            cs.shear = sh;
            cs.leading = lead;
            cs.analysis.u = u;
            cs.analysis.v = v;
            VarSet cv = g.vars().without(u).without(v);
            cs.analysis.res = UniPoly(u, cv, {MPoly::constant(cv, 1)});
            return cs;
        }
        try {
            CriticalSystem cs;
            cs.analysis = analyze_system(A, B);
            cs.g = g;
            cs.shear = sh;
            cs.leading = lead;
            return cs;
        } catch (const analysis_failure& e) {
            last_failure = e.what();
            continue;
        }
    }
    throw internal_error(std::string("critical-point analysis: slope budget exhausted: ") +
                         last_failure);
}

UniPoly cluster_value_poly(const SystemCluster& cl, const MPoly& g, Var u, Var v, Var value_var) {
    UniPoly gv = UniPoly::from_mpoly(g, v);
    int M = std::max(gv.degree(), 0);

    // rational fast path: accumulate everything modulo the (monic) cluster
    // polynomial, which keeps the degrees below deg C throughout
    if (cl.cluster.rational_coeffs() && cl.v_num.rational_coeffs() &&
        cl.v_den.rational_coeffs() && g.vars().subset_of(VarSet{u, v})) {
        UniPoly Cm = cl.cluster.normalized();
        auto mulmod = [&](const UniPoly& a, const UniPoly& b) {
            return UniPoly::rem_rational(a * b, Cm);
        };
        UniPoly one(u, VarSet{}, {MPoly::constant(VarSet{}, 1)});
        std::vector<UniPoly> num_pows{one}, den_pows{one};
        UniPoly vn = UniPoly::rem_rational(cl.v_num, Cm);
        UniPoly vd = UniPoly::rem_rational(cl.v_den, Cm);
        for (int j = 1; j <= M; ++j) {
            num_pows.push_back(mulmod(num_pows.back(), vn));
            den_pows.push_back(mulmod(den_pows.back(), vd));
        }
        UniPoly num(u, VarSet{});
        for (int j = 0; j <= M; ++j) {
            MPoly gj = gv.coeff(j);
            if (gj.is_zero()) continue;
            UniPoly gju = UniPoly::rem_rational(UniPoly::from_mpoly(gj, u), Cm);
            num = num + mulmod(gju, mulmod(num_pows[static_cast<size_t>(j)],
                                           den_pows[static_cast<size_t>(M - j)]));
        }
        VarSet us{u, value_var};
        MPoly N = MPoly::variable(us, value_var) * den_pows[static_cast<size_t>(M)].to_mpoly().promoted(us) -
                  num.to_mpoly().promoted(us);
        UniPoly Nu = UniPoly::from_mpoly(N, u);
        UniPoly Cu = UniPoly::from_mpoly(Cm.to_mpoly().promoted(us), u);
        MPoly D = resultant(Cu, Nu);
        return UniPoly::from_mpoly(D, value_var).normalized();
    }

    VarSet vars = g.vars().without(v);
    vars.add(value_var);
    vars = vars.united(cl.v_den.to_mpoly().vars()).united(cl.v_num.to_mpoly().vars());
    MPoly vden = cl.v_den.to_mpoly().promoted(vars);
    MPoly vnum = cl.v_num.to_mpoly().promoted(vars);
    std::vector<MPoly> den_pows{MPoly::constant(vars, 1)};
    std::vector<MPoly> num_pows{MPoly::constant(vars, 1)};
    for (int j = 1; j <= M; ++j) {
        den_pows.push_back(den_pows.back() * vden);
        num_pows.push_back(num_pows.back() * vnum);
    }
    MPoly num(vars);
    for (int j = 0; j <= M; ++j) {
        MPoly gj = gv.coeff(j).promoted(vars);
        if (gj.is_zero()) continue;
        num = num + gj * num_pows[static_cast<size_t>(j)] * den_pows[static_cast<size_t>(M - j)];
    }
    MPoly N = MPoly::variable(vars, value_var) * den_pows[static_cast<size_t>(M)] - num;
    UniPoly Nu = UniPoly::from_mpoly(N, u);
    UniPoly Cu = UniPoly::from_mpoly(cl.cluster.to_mpoly().promoted(vars), u);
    MPoly D = resultant(Cu, Nu);
    return UniPoly::from_mpoly(D, value_var).normalized();
}

}  // namespace milnor
