#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "milnor/mpoly.hpp"

namespace milnor {

/// Univariate view of a polynomial: a main variable and coefficients that are
/// polynomials in the remaining declared variables. coeffs are ascending;
/// the leading coefficient is nonzero (zero polynomial has an empty list).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Var main, VarSet coeff_vars) : main_(main), cvars_(coeff_vars) {}
    UniPoly(Var main, VarSet coeff_vars, std::vector<MPoly> coeffs);

    static UniPoly from_mpoly(const MPoly& p, Var main);
    MPoly to_mpoly() const;

    Var main() const { return main_; }
    VarSet coeff_vars() const { return cvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MPoly& lc() const;
    MPoly coeff(int k) const;  // zero MPoly outside range
    const std::vector<MPoly>& coeffs() const { return coeffs_; }

    bool rational_coeffs() const;  // every coefficient constant
    std::vector<Rat> rational_coeff_values() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const MPoly& c) const;
    UniPoly scaled(const Rat& c) const;
    bool operator==(const UniPoly& o) const;

    UniPoly derivative() const;

    /// Exact division (throws if not divisible).
    UniPoly exact_div(const UniPoly& o) const;
    /// Divide every coefficient by c exactly.
    UniPoly exact_div_ground(const MPoly& c) const;

    /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f  mod  g.
    static UniPoly prem(const UniPoly& f, const UniPoly& g);
    /// True remainder over rational coefficients.
    static UniPoly rem_rational(const UniPoly& f, const UniPoly& g);

    /// Content of the coefficients (gcd in the coefficient ring) and the
    /// corresponding primitive part.
    MPoly content() const;
    UniPoly primitive_part() const;

    /// Monic over rational coefficients; primitive & sign-normalized otherwise.
    UniPoly normalized() const;

    /// Same polynomial with the coefficient variable set enlarged.
    UniPoly promoted_coeffs(VarSet cvars) const;
    /// Shrink the coefficient variable set (unused variables only).
    UniPoly restricted_coeffs() const;

    MPoly evaluated_at(const Rat& v) const;    // substitute main <- v
    MPoly evaluated_at(const MPoly& v) const;  // substitute main <- polynomial

    std::string str() const;

private:
    void trim();
    Var main_ = Var::x;
    VarSet cvars_;
    std::vector<MPoly> coeffs_;
};

/// Sylvester resultant computed by the subresultant PRS (fraction-free);
/// equals the Sylvester determinant exactly, sign included.
/// Rejects inputs that are both constant in the main variable; for exactly
/// one constant input uses Res(a, q) = a^deg q.
MPoly resultant(const UniPoly& p, const UniPoly& q);

/// (-1)^(n(n-1)/2) * Res(p, p') / lc(p), n = deg p. Degree-0 input rejected.
MPoly discriminant(const UniPoly& p);

/// GCD in the coefficient ring's fraction field, returned as a polynomial:
/// monic for rational coefficients, primitive/sign-normalized otherwise.
UniPoly gcd_uni(const UniPoly& p, const UniPoly& q);

/// Recursive multivariate gcd via content/primitive-part; normalized so the
/// leading graded-lex coefficient is a positive rational with content 1.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

struct SquarefreeDecomposition {
    std::vector<std::pair<UniPoly, int>> factors;  // (factor, multiplicity)
    /// Rational content (and, for parametric coefficients, the content
    /// polynomial in the coefficient variables) left over.
    MPoly content;

    UniPoly product(Var main, VarSet cvars) const;
    /// Squarefree part: product of the factors at multiplicity one.
    UniPoly squarefree_part(Var main, VarSet cvars) const;
};

/// Yun decomposition. Works over rational coefficients and over coefficients
/// in the parameter variables (fraction-free with primitive parts).
SquarefreeDecomposition squarefree(const UniPoly& p);

struct SplitCluster {
    UniPoly factor;
    std::vector<bool> vanishes;  // per test polynomial, on every root of factor
};

/// Splits a squarefree base into pairwise-coprime factors on which each test
/// polynomial either vanishes at every root or at none.
std::vector<SplitCluster> gcd_split(const UniPoly& base, const std::vector<UniPoly>& tests);

/// j-th subresultant polynomial of (P, Q) w.r.t. their main variable,
/// via determinant polynomials of the Sylvester-type matrix (Bareiss
/// elimination, exact). Requires deg P > deg Q >= 1 and 0 <= j <= deg Q.
UniPoly subresultant(const UniPoly& P, const UniPoly& Q, int j);

/// Bareiss fraction-free determinant of a square MPoly matrix.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

/// Number of distinct real roots of a squarefree rational polynomial in the
/// half-open interval (a, b].
int sturm_count(const std::vector<Rat>& poly, const Rat& a, const Rat& b);

/// Disjoint isolating intervals (lo, hi] for the real roots of a squarefree
/// rational polynomial inside [a, b], each of width <= width.
std::vector<std::pair<Rat, Rat>> sturm_isolate(const std::vector<Rat>& poly, const Rat& a,
                                               const Rat& b, const Rat& width);

}  // namespace milnor
