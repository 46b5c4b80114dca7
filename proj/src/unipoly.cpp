#include "milnor/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {

UniPoly::UniPoly(Var main, VarSet coeff_vars, std::vector<MPoly> coeffs)
    : main_(main), cvars_(coeff_vars), coeffs_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_mpoly(const MPoly& p, Var main) {
    VarSet cvars = p.vars().without(main);
    UniPoly u(main, cvars);
    int d = p.vars().contains(main) ? p.degree_in(main) : 0;
    if (p.is_zero()) return u;
    u.coeffs_.assign(static_cast<size_t>(d) + 1, MPoly(cvars));
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        unsigned k = m[main];
        m2[main] = 0;
        u.coeffs_[k].add_term(m2, c);
    }
    u.trim();
    return u;
}

MPoly UniPoly::to_mpoly() const {
    VarSet vs = cvars_;
    vs.add(main_);
    MPoly out(vs);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        for (const auto& [m, c] : coeffs_[k].terms()) {
            Monomial m2 = m;
            m2[main_] = static_cast<uint16_t>(k);
            out.add_term(m2, c);
        }
    }
    return out;
}

const MPoly& UniPoly::lc() const {
    if (coeffs_.empty()) throw internal_error("lc of zero polynomial");
    return coeffs_.back();
}

MPoly UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return MPoly(cvars_);
    return coeffs_[static_cast<size_t>(k)];
}

bool UniPoly::rational_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

std::vector<Rat> UniPoly::rational_coeff_values() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.constant_value());
    return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    VarSet cv = cvars_.united(o.cvars_);
    UniPoly r(main_, cv);
    r.coeffs_.assign(std::max(coeffs_.size(), o.coeffs_.size()), MPoly(cv));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        MPoly v(cv);
        if (i < coeffs_.size()) v = v + coeffs_[i].promoted(cv);
        if (i < o.coeffs_.size()) v = v + o.coeffs_[i].promoted(cv);
        r.coeffs_[i] = v;
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(Rat(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    VarSet cv = cvars_.united(o.cvars_);
    UniPoly r(main_, cv);
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, MPoly(cv));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i].promoted(cv) * o.coeffs_[j].promoted(cv);
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const MPoly& c) const {
    VarSet cv = cvars_.united(c.vars());
    UniPoly r(main_, cv);
    if (c.is_zero()) return r;
    MPoly cp = c.promoted(cv);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(a.promoted(cv) * cp);
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rat& c) const { return scaled(MPoly::constant(cvars_, c)); }

bool UniPoly::operator==(const UniPoly& o) const {
    return main_ == o.main_ && cvars_ == o.cvars_ && coeffs_ == o.coeffs_;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(main_, cvars_);
    for (size_t k = 1; k < coeffs_.size(); ++k) r.coeffs_.push_back(coeffs_[k] * Rat(static_cast<long>(k)));
    r.trim();
    return r;
}

UniPoly UniPoly::exact_div(const UniPoly& o) const {
    if (o.is_zero()) throw internal_error("UniPoly exact_div by zero");
    VarSet cv = cvars_.united(o.cvars_);
    UniPoly rem = promoted_coeffs(cv);
    UniPoly div = o.promoted_coeffs(cv);
    UniPoly quot(main_, cv);
    int dq = degree() - o.degree();
    if (rem.is_zero()) return quot;
    if (dq < 0) throw internal_error("UniPoly exact_div: not divisible (degree)");
    quot.coeffs_.assign(static_cast<size_t>(dq) + 1, MPoly(cv));
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        int shift = rem.degree() - div.degree();
        MPoly qc = rem.lc().exact_div(div.lc());
        quot.coeffs_[static_cast<size_t>(shift)] = qc;
        UniPoly sub(main_, cv);
        sub.coeffs_.assign(static_cast<size_t>(rem.degree()) + 1, MPoly(cv));
        for (size_t i = 0; i < div.coeffs_.size(); ++i)
            sub.coeffs_[i + static_cast<size_t>(shift)] = div.coeffs_[i] * qc;
        sub.trim();
        rem = rem - sub;
    }
    if (!rem.is_zero()) throw internal_error("UniPoly exact_div: nonzero remainder");
    quot.trim();
    return quot;
}

UniPoly UniPoly::exact_div_ground(const MPoly& c) const {
    UniPoly r(main_, cvars_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(a.exact_div(c));
    r.trim();
    return r;
}

UniPoly UniPoly::prem(const UniPoly& f0, const UniPoly& g0) {
    if (g0.is_zero()) throw internal_error("prem by zero");
    VarSet cv = f0.cvars_.united(g0.cvars_);
    UniPoly r = f0.promoted_coeffs(cv);
    UniPoly g = g0.promoted_coeffs(cv);
    int n = g.degree();
    const MPoly d = g.lc();
    int e = r.degree() - n + 1;
    while (!r.is_zero() && r.degree() >= n) {
        int shift = r.degree() - n;
        MPoly rl = r.lc();
        UniPoly sub(r.main_, cv);
        sub.coeffs_.assign(static_cast<size_t>(r.degree()) + 1, MPoly(cv));
        for (size_t i = 0; i < g.coeffs_.size(); ++i)
            sub.coeffs_[i + static_cast<size_t>(shift)] = g.coeffs_[i] * rl;
        sub.trim();
        r = r.scaled(d) - sub;
        --e;
    }
    if (e > 0) {
        MPoly m = MPoly::constant(cv, 1);
        for (int i = 0; i < e; ++i) m = m * d;
        r = r.scaled(m);
    }
    return r;
}

UniPoly UniPoly::rem_rational(const UniPoly& f, const UniPoly& g) {
    if (!f.rational_coeffs() || !g.rational_coeffs())
        throw internal_error("rem_rational needs rational coefficients");
    if (g.is_zero()) throw internal_error("rem by zero");
    UniPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int shift = r.degree() - g.degree();
        Rat q = r.lc().constant_value() / g.lc().constant_value();
        UniPoly sub(f.main_, f.cvars_);
        sub.coeffs_.assign(static_cast<size_t>(r.degree()) + 1, MPoly(f.cvars_));
        for (size_t i = 0; i < g.coeffs_.size(); ++i)
            sub.coeffs_[i + static_cast<size_t>(shift)] = g.coeffs_[i] * q;
        sub.trim();
        r = r - sub;
    }
    return r;
}

namespace {

/// Rational content with sign: the value c such that a/c has coprime integer
/// coefficients and a positive leading (graded-lex) coefficient.
Rat rational_content_signed(const MPoly& a) {
    if (a.is_zero()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : a.terms()) {
        Int n = c.get_num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Int d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (a.terms().begin()->second < 0) content = -content;
    return content;
}

MPoly normalize_mpoly(const MPoly& a) {
    if (a.is_zero()) return a;
    return a / rational_content_signed(a);
}

/// Primitive PRS gcd of primitive inputs, result primitive & sign-normalized.
UniPoly pp_prs_gcd(UniPoly a, UniPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = UniPoly::prem(a, b);
        if (!r.is_zero()) {
            MPoly c = r.content();
            if (!(c.is_constant() && c.constant_value() == 1)) r = r.exact_div_ground(c);
            Rat rc = rational_content_signed(r.to_mpoly());
            if (rc != 1) r = r.scaled(Rat(1 / rc));
        }
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    VarSet vs = a.vars().united(b.vars());
    if (a.is_zero()) return normalize_mpoly(b.promoted(vs));
    if (b.is_zero()) return normalize_mpoly(a.promoted(vs));
    if (a.is_constant() || b.is_constant()) return MPoly::constant(vs, 1);
    MPoly ap = a.promoted(vs), bp = b.promoted(vs);
    // lowest occurring variable as the designated one
    Var w = Var::x;
    bool found = false;
    for (int i = 0; i < kNumVars && !found; ++i) {
        Var v = static_cast<Var>(i);
        if (ap.degree_in(v) > 0 || bp.degree_in(v) > 0) {
            w = v;
            found = true;
        }
    }
    if (!found) return MPoly::constant(vs, 1);
    UniPoly ua = UniPoly::from_mpoly(ap, w);
    UniPoly ub = UniPoly::from_mpoly(bp, w);
    MPoly ca = ua.content(), cb = ub.content();
    MPoly cont = mpoly_gcd(ca, cb);
    UniPoly pa = ua.exact_div_ground(ca), pb = ub.exact_div_ground(cb);
    if (pa.degree() == 0 || pb.degree() == 0)
        return normalize_mpoly(cont.promoted(vs));
    UniPoly g = pp_prs_gcd(pa, pb);
    MPoly gc = g.content();
    g = g.exact_div_ground(gc);
    VarSet gvs = g.to_mpoly().vars().united(cont.vars()).united(vs);
    return normalize_mpoly(g.to_mpoly().promoted(gvs) * cont.promoted(gvs));
}

MPoly UniPoly::content() const {
    if (coeffs_.empty()) return MPoly(cvars_);
    MPoly g(cvars_);
    for (const auto& c : coeffs_) {
        g = mpoly_gcd(g, c).restricted(cvars_);
        if (g.is_constant() && !g.is_zero()) return MPoly::constant(cvars_, 1);
    }
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    MPoly c = content();
    if (c.is_constant() && c.constant_value() == 1) return *this;
    return exact_div_ground(c);
}

UniPoly UniPoly::normalized() const {
    if (is_zero()) return *this;
    if (rational_coeffs()) return scaled(Rat(1 / lc().constant_value()));
    UniPoly p = primitive_part();
    Rat rc = rational_content_signed(p.to_mpoly());
    if (rc != 1) p = p.scaled(Rat(1 / rc));
    return p;
}

UniPoly UniPoly::promoted_coeffs(VarSet cvars) const {
    UniPoly r(main_, cvars);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.promoted(cvars));
    return r;
}

UniPoly UniPoly::restricted_coeffs() const {
    VarSet used;
    for (const auto& c : coeffs_)
        for (const auto& [m, v] : c.terms())
            for (int i = 0; i < kNumVars; ++i)
                if (m.e[i] > 0) used.add(static_cast<Var>(i));
    UniPoly r(main_, used);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(c.restricted(used));
    return r;
}

MPoly UniPoly::evaluated_at(const Rat& v) const {
    MPoly acc(cvars_);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

MPoly UniPoly::evaluated_at(const MPoly& v) const {
    MPoly acc(v.vars().united(cvars_));
    MPoly vp = v.promoted(acc.vars());
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * vp + coeffs_[i].promoted(acc.vars());
    return acc;
}

std::string UniPoly::str() const { return to_mpoly().str(); }

// ---------------------------------------------------------------------------
// Resultant via subresultant PRS.
// ---------------------------------------------------------------------------

namespace {

MPoly mpow(const MPoly& b, int e, VarSet vs) {
    MPoly r = MPoly::constant(vs, 1);
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

/// Res(f, g) for deg f >= deg g >= 1, both nonzero.
MPoly prs_resultant_ordered(const UniPoly& f0, const UniPoly& g0) {
    VarSet vs = f0.coeff_vars();
    UniPoly f = f0, g = g0;
    int n = f.degree(), m = g.degree();
    int d = n - m;
    Rat b_sign = ((d + 1) % 2 == 0) ? Rat(1) : Rat(-1);
    UniPoly h = UniPoly::prem(f, g).scaled(b_sign);
    MPoly lc = g.lc();
    MPoly c = mpow(lc, d, vs);
    std::vector<MPoly> S{MPoly::constant(vs, 1), c};
    c = -c;
    UniPoly last = g;
    while (!h.is_zero()) {
        int k = h.degree();
        int m_old = g.degree();
        f = g;
        g = h;
        last = h;
        d = m_old - k;
        MPoly b = -(lc * mpow(c, d, vs));
        UniPoly h2 = UniPoly::prem(f, g);
        h = h2.is_zero() ? h2 : h2.exact_div_ground(b);
        lc = g.lc();
        if (d > 1) {
            MPoly p = mpow(-lc, d, vs);
            MPoly q = mpow(c, d - 1, vs);
            c = p.exact_div(q);
        } else {
            c = -lc;
        }
        S.push_back(-c);
    }
    if (last.degree() > 0) return MPoly(vs);
    return S.back();
}

}  // namespace

MPoly resultant(const UniPoly& p0, const UniPoly& q0) {
    if (p0.main() != q0.main()) throw input_error("resultant: main variable mismatch");
    if (p0.is_zero() || q0.is_zero()) throw input_error("resultant of zero polynomial");
    VarSet vs = p0.coeff_vars().united(q0.coeff_vars());
    UniPoly p = p0.promoted_coeffs(vs), q = q0.promoted_coeffs(vs);
    int n = p.degree(), m = q.degree();
    if (n == 0 && m == 0) throw input_error("resultant: both inputs constant in the main variable");
    if (m == 0) return mpow(q.lc(), n, vs);
    if (n == 0) return mpow(p.lc(), m, vs);
    if (n >= m) return prs_resultant_ordered(p, q);
    MPoly r = prs_resultant_ordered(q, p);
    if ((n % 2) && (m % 2)) r = -r;
    return r;
}

MPoly discriminant(const UniPoly& p) {
    int n = p.degree();
    if (n < 1) throw input_error("discriminant of a degree-0 polynomial");
    if (n == 1) return MPoly::constant(p.coeff_vars(), 1);
    MPoly res = resultant(p, p.derivative());
    MPoly d = res.exact_div(p.lc().promoted(res.vars()));
    bool flip = ((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1;
    return flip ? -d : d;
}

UniPoly gcd_uni(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw input_error("gcd of two zero polynomials");
    if (p.main() != q.main()) throw input_error("gcd_uni: main variable mismatch");
    MPoly g = mpoly_gcd(p.to_mpoly(), q.to_mpoly());
    return UniPoly::from_mpoly(g, p.main()).normalized();
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun).
// ---------------------------------------------------------------------------

UniPoly SquarefreeDecomposition::product(Var main, VarSet cvars) const {
    UniPoly r(main, cvars, {content});
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * f;
    return r;
}

UniPoly SquarefreeDecomposition::squarefree_part(Var main, VarSet cvars) const {
    UniPoly r(main, cvars, {MPoly::constant(cvars, 1)});
    for (const auto& [f, m] : factors) r = r * f;
    return r;
}

SquarefreeDecomposition squarefree(const UniPoly& p0) {
    if (p0.is_zero()) throw input_error("squarefree decomposition of zero");
    SquarefreeDecomposition out;
    MPoly cont = p0.content();
    UniPoly p = p0.exact_div_ground(cont);
    Rat rc = rational_content_signed(p.to_mpoly());
    p = p.scaled(Rat(1 / rc));
    out.content = cont * rc;
    if (p.degree() == 0) return out;

    UniPoly dp = p.derivative();
    UniPoly g = gcd_uni(p, dp);
    if (g.degree() == 0) {
        out.factors.emplace_back(p.normalized(), 1);
        return out;
    }
    UniPoly c = p.exact_div(g);
    UniPoly d = dp.exact_div(g) - c.derivative();
    int guard = p.degree() + 2;
    for (int i = 1; c.degree() > 0; ++i) {
        if (i > guard) throw internal_error("squarefree: Yun iteration did not terminate");
        UniPoly a = gcd_uni(c, d);
        if (a.degree() > 0) out.factors.emplace_back(a.normalized(), i);
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derivative();
    }
    return out;
}

std::vector<SplitCluster> gcd_split(const UniPoly& base0, const std::vector<UniPoly>& tests0) {
    for (const auto& [f, m] : squarefree(base0).factors)
        if (m != 1) throw input_error("gcd_split: base is not squarefree");
    VarSet cv = base0.coeff_vars();
    for (const auto& t : tests0) cv = cv.united(t.coeff_vars());
    UniPoly base = base0.promoted_coeffs(cv);
    std::vector<UniPoly> tests;
    tests.reserve(tests0.size());
    for (const auto& t : tests0) tests.push_back(t.promoted_coeffs(cv));
    std::vector<SplitCluster> clusters{SplitCluster{base.normalized(), {}}};
    for (const auto& t : tests) {
        std::vector<SplitCluster> next;
        for (auto& cl : clusters) {
            if (t.is_zero()) {
                cl.vanishes.push_back(true);
                next.push_back(cl);
                continue;
            }
            UniPoly g = gcd_uni(cl.factor, t);
            if (g.degree() == 0) {
                cl.vanishes.push_back(false);
                next.push_back(cl);
            } else if (g.degree() == cl.factor.degree()) {
                cl.vanishes.push_back(true);
                next.push_back(cl);
            } else {
                SplitCluster yes{g.normalized(), cl.vanishes};
                SplitCluster no{cl.factor.exact_div(g).normalized(), cl.vanishes};
                yes.vanishes.push_back(true);
                no.vanishes.push_back(false);
                next.push_back(std::move(yes));
                next.push_back(std::move(no));
            }
        }
        clusters = std::move(next);
    }
    return clusters;
}

// ---------------------------------------------------------------------------
// Subresultants via determinant polynomials (Bareiss).
// ---------------------------------------------------------------------------

namespace {

/// Determinants of [common columns | extra column l] for every extra column,
/// where the matrix has kc common columns and rows = kc + 1.
std::vector<MPoly> determinant_polynomial(std::vector<std::vector<MPoly>> M, int kc, VarSet vs) {
    int n = static_cast<int>(M.size());
    int m = static_cast<int>(M[0].size());
    std::vector<MPoly> out(static_cast<size_t>(m - kc), MPoly(vs));
    int sign_flip = 1;
    MPoly prev = MPoly::constant(vs, 1);
    for (int k = 0; k < kc; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!M[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return out;  // rank-deficient common block: all zero
        if (piv != k) {
            std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(k)]);
            sign_flip = -sign_flip;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < m; ++c)
                M[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (M[static_cast<size_t>(r)][static_cast<size_t>(c)] * M[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     M[static_cast<size_t>(r)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(c)])
                        .exact_div(prev);
            M[static_cast<size_t>(r)][static_cast<size_t>(k)] = MPoly(vs);
        }
        prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    for (int c = kc; c < m; ++c) {
        MPoly v = M[static_cast<size_t>(n - 1)][static_cast<size_t>(c)];
        out[static_cast<size_t>(c - kc)] = (sign_flip < 0) ? -v : v;
    }
    return out;
}

}  // namespace

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m) {
    if (m.empty()) throw internal_error("determinant of empty matrix");
    VarSet vs = m[0][0].vars();
    int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    auto dets = determinant_polynomial(std::move(m), n - 1, vs);
    return dets[0];
}

UniPoly subresultant(const UniPoly& P, const UniPoly& Q, int j) {
    if (P.main() != Q.main()) throw internal_error("subresultant: main variable mismatch");
    int p = P.degree(), q = Q.degree();
    if (!(p > q && q >= 1)) throw internal_error("subresultant: needs deg P > deg Q >= 1");
    if (j < 0 || j > q) throw internal_error("subresultant: index out of range");
    VarSet vs = P.coeff_vars().united(Q.coeff_vars());
    if (j == q) {
        MPoly f = MPoly::constant(vs, 1);
        for (int i = 0; i < p - q - 1; ++i) f = f * Q.lc().promoted(vs);
        std::vector<MPoly> cc;
        cc.reserve(Q.coeffs().size());
        for (const auto& c : Q.coeffs()) cc.push_back(c.promoted(vs) * f);
        return UniPoly(P.main(), vs, std::move(cc));
    }
    int rows = p + q - 2 * j;
    int cols = p + q - j;
    int kc = rows - 1;
    std::vector<std::vector<MPoly>> M(static_cast<size_t>(rows),
                                      std::vector<MPoly>(static_cast<size_t>(cols), MPoly(vs)));
    auto fill_row = [&](int row, const UniPoly& F, int shift) {
        // row holds coefficients of v^shift * F; column c corresponds to degree
        // (cols - 1 - c) = p+q-j-1-c.
        for (int c = 0; c < cols; ++c) {
            int deg = cols - 1 - c;
            int k = deg - shift;
            if (k >= 0 && k <= F.degree()) M[static_cast<size_t>(row)][static_cast<size_t>(c)] = F.coeff(k).promoted(vs);
        }
    };
    int r = 0;
    for (int i = q - j - 1; i >= 0; --i) fill_row(r++, P, i);
    for (int i = p - j - 1; i >= 0; --i) fill_row(r++, Q, i);
    auto dets = determinant_polynomial(std::move(M), kc, vs);
    // dets[l] corresponds to column kc + l, i.e. degree j - l
    std::vector<MPoly> coeffs(static_cast<size_t>(j) + 1, MPoly(vs));
    for (int l = 0; l <= j; ++l) coeffs[static_cast<size_t>(j - l)] = dets[static_cast<size_t>(l)];
    return UniPoly(P.main(), vs, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Sturm sequences for real roots of rational squarefree polynomials.
// ---------------------------------------------------------------------------

namespace {

using QP = std::vector<Rat>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qp_derivative(const QP& p) {
    QP r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return r;
}

QP qp_neg_rem(const QP& a, const QP& b) {
    QP r = a;
    qp_trim(r);
    while (r.size() >= b.size() && !r.empty()) {
        Rat f = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
        qp_trim(r);
    }
    for (auto& c : r) c = -c;
    return r;
}

Rat qp_eval(const QP& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::vector<QP> sturm_sequence(QP p) {
    qp_trim(p);
    std::vector<QP> seq;
    if (p.empty()) return seq;
    seq.push_back(p);
    QP d = qp_derivative(p);
    qp_trim(d);
    if (d.empty()) return seq;
    seq.push_back(d);
    while (true) {
        QP r = qp_neg_rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        seq.push_back(r);
    }
    return seq;
}

int sign_variations(const std::vector<QP>& seq, const Rat& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : seq) {
        int s = sgn(qp_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int sturm_count(const std::vector<Rat>& poly, const Rat& a, const Rat& b) {
    auto seq = sturm_sequence(poly);
    if (seq.empty() || seq[0].size() <= 1) return 0;
    return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<std::pair<Rat, Rat>> sturm_isolate(const std::vector<Rat>& poly, const Rat& a,
                                               const Rat& b, const Rat& width) {
    std::vector<std::pair<Rat, Rat>> out;
    QP p = poly;
    qp_trim(p);
    if (p.size() <= 1) return out;
    auto seq = sturm_sequence(p);
    // root exactly at the left endpoint is not seen by (a, b]; check directly
    std::vector<std::pair<Rat, Rat>> work;
    if (qp_eval(p, a) == 0) out.emplace_back(a, a);
    work.emplace_back(a, b);
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int n = sign_variations(seq, lo) - sign_variations(seq, hi);
        if (n == 0) continue;
        if (n == 1 && hi - lo <= width) {
            out.emplace_back(lo, hi);
            continue;
        }
        Rat mid = (lo + hi) / 2;
        if (qp_eval(p, mid) == 0 && n == 1) {
            out.emplace_back(mid, mid);
            continue;
        }
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

}  // namespace milnor
