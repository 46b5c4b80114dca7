#include "milnor/roots.hpp"

#include <algorithm>
#include <deque>

namespace milnor {

namespace {

long bits_of(const Rat& precision) {
    // smallest k with 2^-k <= precision
    long k = 0;
    Rat p(1);
    while (p > precision && k < 4096) {
        p /= 2;
        ++k;
    }
    return k;
}

struct Isolator {
    std::vector<Rat> f, df;
    long prec;

    explicit Isolator(const std::vector<Rat>& coeffs, long working_prec)
        : f(coeffs), prec(working_prec) {
        // scale to coprime integer coefficients
        Int num_gcd(0), den_lcm(1);
        for (const auto& c : f) {
            Int n = c.get_num();
            mpz_abs(n.get_mpz_t(), n.get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            Int d = c.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
        if (num_gcd != 0) {
            Rat scale(den_lcm, num_gcd);
            scale.canonicalize();
            if (scale != 1)
                for (auto& c : f) c *= scale;
        }
        for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Rat(static_cast<long>(i)));
    }

    int degree() const { return static_cast<int>(f.size()) - 1; }

    Rat cauchy_bound() const {
        Rat m(0);
        const Rat an = rat_abs(f.back());
        for (size_t i = 0; i + 1 < f.size(); ++i) {
            Rat v = rat_abs(f[i]) / an;
            if (v > m) m = v;
        }
        return m + 1;
    }

    ComplexBox eval_f(const ComplexBox& z) const { return cb_eval_poly(f, z, prec); }
    ComplexBox eval_df(const ComplexBox& z) const { return cb_eval_poly(df, z, prec); }

    /// Interval Newton: f'(B) excluding 0 and N(B) inside B certifies exactly
    /// one root in B, located in N(B).
    std::optional<ComplexBox> certify(const ComplexBox& B) const {
        ComplexBox K = eval_df(B);
        if (K.contains_zero()) return std::nullopt;
        Rat mre = B.re.mid(), mim = B.im.mid();
        ComplexBox fm = cb_eval_poly_point(f, mre, mim);
        ComplexBox N = cb_sub(ComplexBox::point(mre, mim), cb_div(fm, K, prec), prec);
        if (!B.contains(N)) return std::nullopt;
        return cb_intersect(N, B);
    }

    ComplexBox newton_step(const ComplexBox& X) const {
        ComplexBox K = eval_df(X);
        if (K.contains_zero()) return X;
        Rat mre = X.re.mid(), mim = X.im.mid();
        ComplexBox fm = cb_eval_poly_point(f, mre, mim);
        ComplexBox N = cb_sub(ComplexBox::point(mre, mim), cb_div(fm, K, prec), prec);
        if (X.disjoint(N)) return X;
        return cb_intersect(N, X);
    }

    ComplexBox refine_to(ComplexBox X, const Rat& target) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            for (int it = 0; it < 200 && X.max_halfwidth() > target; ++it) {
                ComplexBox Y = newton_step(X);
                bool shrank = Y.re.width() < X.re.width() || Y.im.width() < X.im.width();
                X = Y;
                if (!shrank) {
                    // bisect the wider axis; drop a half only when it provably
                    // holds no root
                    ComplexBox A = X, B = X;
                    if (X.re.width() >= X.im.width()) {
                        Rat m = X.re.mid();
                        A.re = RatInterval(X.re.lo, m);
                        B.re = RatInterval(m, X.re.hi);
                    } else {
                        Rat m = X.im.mid();
                        A.im = RatInterval(X.im.lo, m);
                        B.im = RatInterval(m, X.im.hi);
                    }
                    bool a_out = !eval_f(A).contains_zero();
                    bool b_out = !eval_f(B).contains_zero();
                    if (a_out && !b_out)
                        X = B;
                    else if (b_out && !a_out)
                        X = A;
                }
            }
            if (X.max_halfwidth() <= target) return X;
            // the dyadic rounding grid is too coarse for the target: rerun
            // with more working precision
            prec *= 2;
        }
        return X;
    }

    std::vector<ComplexBox> isolate_all() {
        int n = degree();
        if (n <= 0) return {};
        Rat M = cauchy_bound();
        std::vector<ComplexBox> certified;
        std::deque<std::pair<ComplexBox, int>> work;
        work.emplace_back(ComplexBox(RatInterval(-M, M), RatInterval(-M, M)), 0);
        const int max_depth = 128;
        while (!work.empty()) {
            auto [B, depth] = work.front();
            work.pop_front();
            if (!eval_f(B).contains_zero()) continue;
            Rat wr = B.re.width() / 4, wi = B.im.width() / 4;
            ComplexBox inflated(RatInterval(B.re.lo - wr, B.re.hi + wr),
                                RatInterval(B.im.lo - wi, B.im.hi + wi));
            if (auto c = certify(inflated)) {
                certified.push_back(*c);
                continue;
            }
            if (depth >= max_depth)
                throw internal_error("root isolation: subdivision depth exhausted");
            Rat mre = B.re.mid(), mim = B.im.mid();
            work.emplace_back(ComplexBox(RatInterval(B.re.lo, mre), RatInterval(B.im.lo, mim)),
                              depth + 1);
            work.emplace_back(ComplexBox(RatInterval(mre, B.re.hi), RatInterval(B.im.lo, mim)),
                              depth + 1);
            work.emplace_back(ComplexBox(RatInterval(B.re.lo, mre), RatInterval(mim, B.im.hi)),
                              depth + 1);
            work.emplace_back(ComplexBox(RatInterval(mre, B.re.hi), RatInterval(mim, B.im.hi)),
                              depth + 1);
        }
        return dedupe(std::move(certified));
    }

    std::vector<ComplexBox> dedupe(std::vector<ComplexBox> boxes) {
        for (int round = 0; round < 200; ++round) {
            bool changed = false;
            for (size_t i = 0; i < boxes.size() && !changed; ++i) {
                for (size_t j = i + 1; j < boxes.size() && !changed; ++j) {
                    if (boxes[i].disjoint(boxes[j])) continue;
                    ComplexBox hull = cb_hull(boxes[i], boxes[j]);
                    if (certify(hull)) {
                        // a unique root in the hull: both boxes hold the same root
                        boxes[i] = cb_intersect(boxes[i], boxes[j]);
                        boxes.erase(boxes.begin() + static_cast<long>(j));
                    } else {
                        boxes[i] = refine_to(boxes[i], boxes[i].max_halfwidth() / 4);
                        boxes[j] = refine_to(boxes[j], boxes[j].max_halfwidth() / 4);
                    }
                    changed = true;
                }
            }
            if (!changed) return boxes;
        }
        throw internal_error("root isolation: dedupe did not separate boxes");
    }
};

RootBox to_root_box(Isolator& iso, ComplexBox X, const Rat& precision) {
    for (int round = 0; round < 64; ++round) {
        Rat cre = X.re.mid(), cim = X.im.mid();
        Rat r = X.max_halfwidth();
        if (r == 0) r = precision / 2;
        ComplexBox square(RatInterval(cre - r, cre + r), RatInterval(cim - r, cim + r));
        if (r <= precision && iso.certify(square)) return RootBox{cre, cim, r, 1, 0};
        Rat target = (r > precision ? precision : r) / 4;
        X = iso.refine_to(X, target);
    }
    throw internal_error("root isolation: square certification failed");
}

}  // namespace

Rat default_precision() {
    Rat p(1);
    for (int i = 0; i < 53; ++i) p /= 2;
    return p;
}

AlgebraicValueSet isolate_clusters(const std::vector<std::pair<UniPoly, int>>& factors,
                                   Var variable, const Rat& precision) {
    if (precision <= 0) throw input_error("precision must be positive");
    AlgebraicValueSet out;
    out.variable = variable;
    long prec = bits_of(precision) + 64;
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& [fac, mult] = factors[fi];
        if (!fac.rational_coeffs())
            throw input_error("isolate: factor has non-rational coefficients");
        out.defining.factors.emplace_back(fac, mult);
        if (fac.degree() <= 0) continue;
        Isolator iso(fac.rational_coeff_values(), prec);
        auto boxes = iso.isolate_all();
        if (static_cast<int>(boxes.size()) != fac.degree())
            throw internal_error("root isolation: found " + std::to_string(boxes.size()) +
                                 " roots of a degree-" + std::to_string(fac.degree()) +
                                 " squarefree factor");
        for (auto& b : boxes) {
            ComplexBox refined = iso.refine_to(b, precision / 2);
            RootBox rb = to_root_box(iso, refined, precision);
            rb.multiplicity = mult;
            rb.defining_factor = static_cast<int>(fi);
            out.boxes.push_back(rb);
        }
    }
    // boxes of distinct roots must be pairwise disjoint, also across factors
    for (int round = 0;; ++round) {
        bool overlap = false;
        for (size_t i = 0; i < out.boxes.size() && !overlap; ++i)
            for (size_t j = i + 1; j < out.boxes.size() && !overlap; ++j)
                if (!out.boxes[i].box().disjoint(out.boxes[j].box())) overlap = true;
        if (!overlap) break;
        if (round >= 64) throw internal_error("root isolation: cross-factor separation failed");
        Rat finer = precision;
        for (int k = 0; k <= round; ++k) finer /= 4;
        for (auto& rb : out.boxes) {
            const auto& fac = out.defining.factors[static_cast<size_t>(rb.defining_factor)].first;
            Isolator iso(fac.rational_coeff_values(), bits_of(finer) + 64);
            ComplexBox refined = iso.refine_to(rb.box(), finer / 2);
            RootBox nrb = to_root_box(iso, refined, finer);
            nrb.multiplicity = rb.multiplicity;
            nrb.defining_factor = rb.defining_factor;
            rb = nrb;
        }
    }
    std::sort(out.boxes.begin(), out.boxes.end(), [](const RootBox& a, const RootBox& b) {
        if (a.cre != b.cre) return a.cre < b.cre;
        return a.cim < b.cim;
    });
    out.cardinality = static_cast<int>(out.boxes.size());
    return out;
}

AlgebraicValueSet isolate(const UniPoly& p, const Rat& precision) {
    if (p.is_zero()) throw input_error("isolate: zero polynomial");
    if (!p.rational_coeffs()) throw input_error("isolate: non-rational coefficients");
    auto sf = squarefree(p);
    return isolate_clusters(sf.factors, p.main(), precision);
}

AlgebraicValueSet refine(const AlgebraicValueSet& set, const Rat& precision) {
    if (precision <= 0) throw input_error("precision must be positive");
    AlgebraicValueSet out;
    out.variable = set.variable;
    out.defining = set.defining;
    out.cardinality = set.cardinality;
    long prec = bits_of(precision) + 64;
    for (const auto& rb : set.boxes) {
        if (rb.radius <= precision) {
            out.boxes.push_back(rb);
            continue;
        }
        const auto& fac = set.defining.factors[static_cast<size_t>(rb.defining_factor)].first;
        Isolator iso(fac.rational_coeff_values(), prec);
        ComplexBox refined = iso.refine_to(rb.box(), precision / 2);
        RootBox nrb = to_root_box(iso, refined, precision);
        if (nrb.radius > rb.radius) {  // nesting: never grow a box
            out.boxes.push_back(rb);
            continue;
        }
        nrb.multiplicity = rb.multiplicity;
        nrb.defining_factor = rb.defining_factor;
        out.boxes.push_back(nrb);
    }
    return out;
}

namespace {

Rat linf_lower(const RootBox& a, const RootBox& b) {
    Rat dre = rat_abs(a.cre - b.cre) - a.radius - b.radius;
    Rat dim = rat_abs(a.cim - b.cim) - a.radius - b.radius;
    Rat d = std::max(dre, dim);
    return d > 0 ? d : Rat(0);
}

Rat linf_upper(const RootBox& a, const RootBox& b) {
    Rat dre = rat_abs(a.cre - b.cre) + a.radius + b.radius;
    Rat dim = rat_abs(a.cim - b.cim) + a.radius + b.radius;
    return std::max(dre, dim);
}

}  // namespace

MatchResult match_values(const AlgebraicValueSet& a0, const AlgebraicValueSet& b0,
                         int refine_budget) {
    AlgebraicValueSet a = a0, b = b0;
    MatchResult res;
    std::vector<bool> used_a(a.boxes.size(), false), used_b(b.boxes.size(), false);
    Rat eps(1, 16);
    for (int round = 0; round <= refine_budget; ++round) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (size_t i = 0; i < a.boxes.size(); ++i) {
                if (used_a[i]) continue;
                int best = -1;
                Rat best_ub;
                for (size_t j = 0; j < b.boxes.size(); ++j) {
                    if (used_b[j]) continue;
                    Rat ub = linf_upper(a.boxes[i], b.boxes[j]);
                    if (best < 0 || ub < best_ub) {
                        best = static_cast<int>(j);
                        best_ub = ub;
                    }
                }
                if (best < 0) continue;
                bool unique = true;
                for (size_t j = 0; j < b.boxes.size() && unique; ++j)
                    if (!used_b[j] && static_cast<int>(j) != best &&
                        linf_lower(a.boxes[i], b.boxes[j]) <= best_ub)
                        unique = false;
                for (size_t k = 0; k < a.boxes.size() && unique; ++k)
                    if (!used_a[k] && k != i &&
                        linf_lower(a.boxes[k], b.boxes[static_cast<size_t>(best)]) <= best_ub)
                        unique = false;
                if (unique) {
                    res.matched.emplace_back(static_cast<int>(i), best);
                    used_a[i] = true;
                    used_b[static_cast<size_t>(best)] = true;
                    progress = true;
                }
            }
        }
        size_t remaining_a = 0, remaining_b = 0;
        for (bool u : used_a)
            if (!u) ++remaining_a;
        for (bool u : used_b)
            if (!u) ++remaining_b;
        if (remaining_a == 0 || remaining_b == 0) break;
        if (round == refine_budget) {
            res.conclusive = false;
            break;
        }
        a = refine(a, eps);
        b = refine(b, eps);
        eps /= 16;
    }
    for (size_t i = 0; i < a.boxes.size(); ++i)
        if (!used_a[i]) res.unmatched_a.push_back(static_cast<int>(i));
    for (size_t j = 0; j < b.boxes.size(); ++j)
        if (!used_b[j]) res.unmatched_b.push_back(static_cast<int>(j));
    std::sort(res.matched.begin(), res.matched.end());
    return res;
}

}  // namespace milnor
