#include "milnor/mpoly.hpp"

#include <sstream>

namespace milnor {

namespace {
const char* kVarNames[kNumVars] = {"x", "y", "x0", "s", "t"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    throw input_error("unknown variable '" + name + "'");
}

int VarSet::size() const {
    int n = 0;
    for (int i = 0; i < kNumVars; ++i)
        if (contains(static_cast<Var>(i))) ++n;
    return n;
}

std::vector<Var> VarSet::list() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (contains(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

std::string VarSet::str() const {
    std::string out = "{";
    bool first = true;
    for (Var v : list()) {
        if (!first) out += ",";
        out += var_name(v);
        first = false;
    }
    return out + "}";
}

std::string Shear::str() const {
    std::ostringstream os;
    os << var_name(source) << " <- " << var_name(source);
    if (slope >= 0)
        os << " + " << rat_to_string(slope);
    else
        os << " - " << rat_to_string(Rat(-slope));
    os << "*" << var_name(target);
    return os.str();
}

MPoly::MPoly(VarSet vars, const Rat& c) : vars_(vars) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(VarSet vars, Var v, const Rat& coeff) {
    if (!vars.contains(v))
        throw input_error(std::string("variable ") + var_name(v) + " not declared in " + vars.str());
    MPoly p(vars);
    Monomial m;
    m[v] = 1;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

MPoly MPoly::monomial(VarSet vars, const Monomial& m, const Rat& coeff) {
    MPoly p(vars);
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total_degree());
}

int MPoly::degree_in(VarSet vs) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree_in(vs)));
    return d;
}

int MPoly::degree_in(Var v) const { return degree_in(VarSet{v}); }

void MPoly::check_same_vars(const MPoly& o) const {
    if (!(vars_ == o.vars_))
        throw input_error("variable-list mismatch: " + vars_.str() + " vs " + o.vars_.str());
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rat(-c));
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same_vars(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_same_vars(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, Rat(-c));
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_vars(o);
    MPoly r(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MPoly MPoly::operator/(const Rat& c) const {
    if (c == 0) throw internal_error("division by zero constant");
    return *this * Rat(1 / c);
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(vars_, 1);
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

MPoly MPoly::exact_div(const MPoly& o) const {
    check_same_vars(o);
    if (o.is_zero()) throw internal_error("exact_div by zero");
    MPoly rem = *this;
    MPoly quot(vars_);
    const auto& dl = *o.terms_.begin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.begin();
        if (!dl.first.divides(rl.first))
            throw internal_error("exact_div: not divisible");
        Monomial qm = rl.first.quotient(dl.first);
        Rat qc = rl.second / dl.second;
        quot.add_term(qm, qc);
        MPoly sub(vars_);
        for (const auto& [m, c] : o.terms_) sub.add_term(m.times(qm), c * qc);
        rem = rem - sub;
    }
    return quot;
}

MPoly MPoly::partial(Var v) const {
    if (!vars_.contains(v))
        throw input_error(std::string("partial w.r.t. undeclared variable ") + var_name(v));
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        uint16_t e = m[v];
        if (e == 0) continue;
        Monomial m2 = m;
        m2[v] = static_cast<uint16_t>(e - 1);
        r.add_term(m2, c * Rat(e));
    }
    return r;
}

MPoly MPoly::coeff_of(Var v, unsigned k) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Monomial m2 = m;
        m2[v] = 0;
        r.add_term(m2, c);
    }
    return r;
}

MPoly MPoly::substituted(Var v, const MPoly& rep) const {
    VarSet out_vars = vars_.united(rep.vars());
    MPoly r(out_vars);
    // cache powers of rep
    std::vector<MPoly> powers{MPoly::constant(out_vars, 1)};
    MPoly rep_p = rep.promoted(out_vars);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[v];
        while (powers.size() <= e) powers.push_back(powers.back() * rep_p);
        Monomial m2 = m;
        m2[v] = 0;
        MPoly base = MPoly::monomial(out_vars, m2, c);
        r = r + base * powers[e];
    }
    return r;
}

MPoly MPoly::substituted(Var v, const Rat& value) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2[v] = 0;
        r.add_term(m2, c * rat_pow(value, m[v]));
    }
    return r;
}

MPoly MPoly::sheared(const Shear& sh) const {
    if (sh.slope == 0) return *this;
    if (!vars_.contains(sh.source) || !vars_.contains(sh.target))
        throw input_error("shear variables not declared in " + vars_.str());
    MPoly rep = MPoly::variable(vars_, sh.source) + MPoly::variable(vars_, sh.target) * sh.slope;
    return substituted(sh.source, rep);
}

MPoly MPoly::promoted(VarSet vars) const {
    if (!vars_.subset_of(vars)) throw internal_error("promoted: not a superset");
    MPoly r(vars);
    r.terms_ = terms_;
    return r;
}

MPoly MPoly::restricted(VarSet vars) const {
    MPoly r(vars);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i] > 0 && !vars.contains(static_cast<Var>(i)))
                throw internal_error("restricted: variable occurs in polynomial");
        r.terms_.emplace(m, c);
    }
    return r;
}

Rat MPoly::evaluated(const std::map<Var, Rat>& point) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end()) throw internal_error("evaluated: unassigned variable");
            v *= rat_pow(it->second, m.e[i]);
        }
        total += v;
    }
    return total;
}

MPoly MPoly::leading_form(VarSet vs) const {
    int d = degree_in(vs);
    MPoly r(vars_);
    if (d < 0) return r;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.degree_in(vs)) == d) r.terms_.emplace(m, c);
    return r;
}

std::vector<MPoly> MPoly::degree_forms(VarSet vs) const {
    std::vector<MPoly> out;
    int d = degree_in(vs);
    if (d < 0) return out;  // zero polynomial: empty list, degree -inf
    out.assign(d + 1, MPoly(vars_));
    for (const auto& [m, c] : terms_) out[d - m.degree_in(vs)].add_term(m, c);
    return out;
}

MPoly MPoly::homogenized(VarSet vs, Var hom) const {
    int d = degree_in(vs);
    if (d < 1) throw input_error("homogenize: input is constant");
    VarSet out_vars = vars_;
    out_vars.add(hom);
    MPoly r(out_vars);
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2[hom] = static_cast<uint16_t>(m2[hom] + d - m.degree_in(vs));
        r.add_term(m2, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // parameters first, then coordinates: t, s, x, y, x0
    static const Var kPrintOrder[kNumVars] = {Var::t, Var::s, Var::x, Var::y, Var::x0};
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        bool negative = a < 0;
        bool has_var = m.total_degree() > 0;
        if (first) {
            // a leading unary minus would bind before '^' in the grammar, so a
            // negative leading term always carries an explicit coefficient
            if (negative && has_var) {
                os << rat_to_string(a);
            } else if (negative) {
                os << rat_to_string(a);
            } else if (a != 1 || !has_var) {
                os << rat_to_string(a);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) a = -a;
            if (a != 1 || !has_var) os << rat_to_string(a);
        }
        bool coeff_shown = first ? (negative || c != 1 || !has_var) : (a != 1 || !has_var);
        first = false;
        bool need_star = coeff_shown;
        for (Var v : kPrintOrder) {
            int i = static_cast<int>(v);
            if (m.e[i] == 0) continue;
            if (need_star) os << "*";
            os << kVarNames[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
            need_star = true;
        }
    }
    return os.str();
}

MPoly mp_add(const MPoly& p, const MPoly& q) { return p + q; }
MPoly mp_sub(const MPoly& p, const MPoly& q) { return p - q; }
MPoly mp_mul(const MPoly& p, const MPoly& q) { return p * q; }

MonicShearResult make_monic_in(const MPoly& p, Var u, Var v, bool require_constant,
                               int slope_budget) {
    int d = p.degree_in(VarSet{u, v});
    if (d < 1) throw input_error("make_monic: input constant in " + VarSet{u, v}.str());
    VarSet coeff_vars = p.vars().without(u).without(v);
    MonicShearResult fallback;
    bool have_fallback = false;
    for (int k = 0; k < slope_budget; ++k) {
        // 0, 1, -1, 2, -2, ...
        int a = (k + 1) / 2 * ((k % 2) ? 1 : -1);
        if (k == 0) a = 0;
        Shear sh{v, u, Rat(a)};
        MPoly g = p.sheared(sh);
        if (g.degree_in(v) != d) continue;
        MPoly lead = g.coeff_of(v, static_cast<unsigned>(d));
        if (lead.is_zero() || lead.degree_in(u) > 0 || lead.degree_in(v) > 0) continue;
        if (lead.is_constant()) return MonicShearResult{g, sh, lead};
        // t-dependent leading coefficient: remember the first hit
        if (!require_constant && !have_fallback && lead.degree_in(coeff_vars) >= 0) {
            fallback = MonicShearResult{g, sh, lead};
            have_fallback = true;
        }
    }
    if (have_fallback) return fallback;
    throw internal_error("make_monic: slope budget exhausted (bug)");
}

MonicShearResult make_y_monic(const MPoly& p, bool require_constant, int slope_budget) {
    return make_monic_in(p, Var::x, Var::y, require_constant, slope_budget);
}

}  // namespace milnor
