#pragma once

#include <vector>

#include "milnor/common.hpp"

namespace milnor {

/// Closed interval with exact rational endpoints. Operations round outward to
/// a dyadic grid (2^-prec) to keep denominators bounded; prec < 0 disables
/// rounding. Soundness never depends on the rounding.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(const Rat& v) : lo(v), hi(v) {}
    RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    Rat mag() const {  // max |v| over the interval
        Rat a = rat_abs(lo), b = rat_abs(hi);
        return a > b ? a : b;
    }
    Rat mig() const {  // min |v| over the interval
        if (contains_zero()) return Rat(0);
        Rat a = rat_abs(lo), b = rat_abs(hi);
        return a < b ? a : b;
    }
    RatInterval rounded(long prec) const {
        if (prec < 0) return *this;
        return RatInterval(dyadic_floor(lo, prec), dyadic_ceil(hi, prec));
    }
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b, long prec);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b, long prec);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b, long prec);
/// Tight square: [mig^2, mag^2] (the generic product loses the sign).
RatInterval iv_square(const RatInterval& a, long prec);
RatInterval iv_neg(const RatInterval& a);
/// Division; the denominator must not contain zero.
RatInterval iv_div(const RatInterval& a, const RatInterval& b, long prec);
RatInterval iv_hull(const RatInterval& a, const RatInterval& b);

/// Axis-aligned rectangle in C with exact rational bounds.
struct ComplexBox {
    RatInterval re, im;

    ComplexBox() = default;
    ComplexBox(const RatInterval& r, const RatInterval& i) : re(r), im(i) {}
    static ComplexBox point(const Rat& r, const Rat& i) {
        return ComplexBox(RatInterval(r), RatInterval(i));
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool contains(const ComplexBox& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool disjoint(const ComplexBox& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    Rat max_halfwidth() const {
        Rat a = re.width(), b = im.width();
        return (a > b ? a : b) / 2;
    }
};

ComplexBox cb_add(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox cb_sub(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox cb_mul(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox cb_neg(const ComplexBox& a);
/// Division; the denominator box must exclude zero.
ComplexBox cb_div(const ComplexBox& a, const ComplexBox& b, long prec);
ComplexBox cb_hull(const ComplexBox& a, const ComplexBox& b);
ComplexBox cb_intersect(const ComplexBox& a, const ComplexBox& b);  // must overlap

/// Horner evaluation of a rational-coefficient polynomial over a box.
ComplexBox cb_eval_poly(const std::vector<Rat>& coeffs, const ComplexBox& z, long prec);
/// Exact evaluation at a rational point (re, im), returned as a point box.
ComplexBox cb_eval_poly_point(const std::vector<Rat>& coeffs, const Rat& re, const Rat& im);

}  // namespace milnor
