#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "milnor/common.hpp"

namespace milnor {

/// The fixed variable universe. x, y are the affine coordinates, x0 the
/// homogenizing variable, s the value-pencil variable, t the family parameter.
enum class Var : uint8_t { x = 0, y = 1, x0 = 2, s = 3, t = 4 };

inline constexpr int kNumVars = 5;

const char* var_name(Var v);
Var var_from_name(const std::string& name);

/// Ordered set of declared variables, kept as a bitmask over the universe.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<Var> vs) {
        for (Var v : vs) add(v);
    }
    void add(Var v) { mask_ |= bit(v); }
    void remove(Var v) { mask_ &= ~bit(v); }
    bool contains(Var v) const { return mask_ & bit(v); }
    bool operator==(const VarSet&) const = default;
    VarSet united(VarSet o) const {
        VarSet r;
        r.mask_ = mask_ | o.mask_;
        return r;
    }
    VarSet without(Var v) const {
        VarSet r = *this;
        r.remove(v);
        return r;
    }
    bool subset_of(VarSet o) const { return (mask_ & ~o.mask_) == 0; }
    int size() const;
    std::vector<Var> list() const;
    std::string str() const;

private:
    static uint8_t bit(Var v) { return static_cast<uint8_t>(1u << static_cast<uint8_t>(v)); }
    uint8_t mask_ = 0;
};

/// Exponent vector over the full universe (undeclared slots stay zero).
struct Monomial {
    std::array<uint16_t, kNumVars> e{};

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    unsigned degree_in(VarSet vs) const {
        unsigned d = 0;
        for (int i = 0; i < kNumVars; ++i)
            if (vs.contains(static_cast<Var>(i))) d += e[i];
        return d;
    }
    uint16_t operator[](Var v) const { return e[static_cast<int>(v)]; }
    uint16_t& operator[](Var v) { return e[static_cast<int>(v)]; }
    bool operator==(const Monomial&) const = default;
    Monomial times(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial quotient(const Monomial& o) const {  // *this / o, assumes divisibility
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
        return r;
    }
};

/// Graded lexicographic, descending, so map iteration starts at the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (int i = 0; i < kNumVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

/// Substitution source <- source + slope * target. Inverse: slope negated.
struct Shear {
    Var target = Var::y;
    Var source = Var::x;
    Rat slope = 0;

    Shear inverse() const { return Shear{target, source, Rat(-slope)}; }
    bool is_identity() const { return slope == 0; }
    std::string str() const;
};

/// Exact multivariate polynomial over Q. Canonical form: no zero coefficients,
/// terms ordered graded-lex descending. Values are immutable in spirit; all
/// operations return new polynomials.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(VarSet vars) : vars_(vars) {}
    MPoly(VarSet vars, const Rat& c);

    static MPoly constant(VarSet vars, const Rat& c) { return MPoly(vars, c); }
    static MPoly variable(VarSet vars, Var v, const Rat& coeff = Rat(1));
    static MPoly monomial(VarSet vars, const Monomial& m, const Rat& coeff);

    VarSet vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0); }
    /// Constant value; input must be constant.
    Rat constant_value() const;
    size_t term_count() const { return terms_.size(); }

    /// Total degree over all declared variables; -1 for the zero polynomial.
    int total_degree() const;
    /// Total degree counting only the given variables; -1 for zero.
    int degree_in(VarSet vs) const;
    int degree_in(Var v) const;

    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    MPoly operator/(const Rat& c) const;

    MPoly pow(unsigned e) const;

    /// Exact division; throws internal_error if o does not divide *this.
    MPoly exact_div(const MPoly& o) const;

    /// Formal partial derivative. Throws input_error for an undeclared variable.
    MPoly partial(Var v) const;

    /// Coefficient of v^k, as a polynomial over the same variable set.
    MPoly coeff_of(Var v, unsigned k) const;

    /// Substitute a polynomial for a variable (result over the union of
    /// variable sets minus nothing; rep may reintroduce v).
    MPoly substituted(Var v, const MPoly& rep) const;
    /// Substitute a rational constant for a variable; v leaves the var set? No:
    /// the variable stays declared, its exponents become zero.
    MPoly substituted(Var v, const Rat& value) const;

    MPoly sheared(const Shear& sh) const;

    /// Same polynomial over a larger variable set.
    MPoly promoted(VarSet vars) const;
    /// Shrink the declared set; throws if a dropped variable actually occurs.
    MPoly restricted(VarSet vars) const;

    /// Evaluate fully; every declared variable must be assigned.
    Rat evaluated(const std::map<Var, Rat>& point) const;

    MPoly leading_form(VarSet vs) const;  // top-degree part w.r.t. vs

    /// [f^d, f^{d-1}, ..., f^0] with respect to total degree in vs.
    /// Zero polynomial yields an empty list.
    std::vector<MPoly> degree_forms(VarSet vs) const;

    MPoly homogenized(VarSet vs, Var hom) const;

    /// Canonical text form: monomials in descending graded-lex order, explicit
    /// '*' and '^', rational coefficients as a/b. Round-trips through parse().
    std::string str() const;

    void add_term(const Monomial& m, const Rat& c);  // canonicalizing insert

private:
    void check_same_vars(const MPoly& o) const;
    VarSet vars_;
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

/// arith() of the spec; op in {add, sub, mul} dispatched by callers through
/// the operators above. Kept as named functions for symmetry with the tests.
MPoly mp_add(const MPoly& p, const MPoly& q);
MPoly mp_sub(const MPoly& p, const MPoly& q);
MPoly mp_mul(const MPoly& p, const MPoly& q);

/// Shears p so the coefficient of y^d (d = total degree in {x,y}) is a nonzero
/// constant. Slopes tried in the order 0, 1, -1, 2, -2, ...
///
/// With t among the coefficients a slope making the leading coefficient free
/// of t may not exist; `require_constant` controls whether a t-dependent
/// (x-free) leading coefficient is accepted. The t-roots of that coefficient
/// are exceptional parameters collected by the family module.
struct MonicShearResult {
    MPoly poly;
    Shear shear;
    MPoly leading;  // coefficient of y^d after the shear; constant iff t-free
};
MonicShearResult make_y_monic(const MPoly& p, bool require_constant = true, int slope_budget = 64);

/// Same slope search for a germ in (u, v): substitutes u <- u + a*v until the
/// v-degree equals the total degree with constant leading coefficient.
MonicShearResult make_monic_in(const MPoly& p, Var u, Var v, bool require_constant = true,
                               int slope_budget = 64);

}  // namespace milnor
