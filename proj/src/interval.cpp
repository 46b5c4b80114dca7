#include "milnor/interval.hpp"

#include <algorithm>

namespace milnor {

RatInterval iv_add(const RatInterval& a, const RatInterval& b, long prec) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi).rounded(prec);
}

RatInterval iv_sub(const RatInterval& a, const RatInterval& b, long prec) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo).rounded(prec);
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b, long prec) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return RatInterval(lo, hi).rounded(prec);
}

RatInterval iv_square(const RatInterval& a, long prec) {
    Rat lo = a.mig(), hi = a.mag();
    return RatInterval(lo * lo, hi * hi).rounded(prec);
}

RatInterval iv_neg(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }

RatInterval iv_div(const RatInterval& a, const RatInterval& b, long prec) {
    if (b.contains_zero()) throw internal_error("interval division by interval containing zero");
    Rat il = 1 / b.hi, ih = 1 / b.lo;
    return iv_mul(a, RatInterval(il, ih), prec);
}

RatInterval iv_hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

ComplexBox cb_add(const ComplexBox& a, const ComplexBox& b, long prec) {
    return ComplexBox(iv_add(a.re, b.re, prec), iv_add(a.im, b.im, prec));
}

ComplexBox cb_sub(const ComplexBox& a, const ComplexBox& b, long prec) {
    return ComplexBox(iv_sub(a.re, b.re, prec), iv_sub(a.im, b.im, prec));
}

ComplexBox cb_mul(const ComplexBox& a, const ComplexBox& b, long prec) {
    RatInterval re = iv_sub(iv_mul(a.re, b.re, prec), iv_mul(a.im, b.im, prec), prec);
    RatInterval im = iv_add(iv_mul(a.re, b.im, prec), iv_mul(a.im, b.re, prec), prec);
    return ComplexBox(re, im);
}

ComplexBox cb_neg(const ComplexBox& a) { return ComplexBox(iv_neg(a.re), iv_neg(a.im)); }

ComplexBox cb_div(const ComplexBox& a, const ComplexBox& b, long prec) {
    RatInterval norm = iv_add(iv_square(b.re, prec), iv_square(b.im, prec), prec);
    if (norm.contains_zero()) throw internal_error("complex box division by box containing zero");
    ComplexBox conj(b.re, iv_neg(b.im));
    ComplexBox num = cb_mul(a, conj, prec);
    return ComplexBox(iv_div(num.re, norm, prec), iv_div(num.im, norm, prec));
}

ComplexBox cb_hull(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(iv_hull(a.re, b.re), iv_hull(a.im, b.im));
}

ComplexBox cb_intersect(const ComplexBox& a, const ComplexBox& b) {
    if (a.disjoint(b)) throw internal_error("intersection of disjoint boxes");
    return ComplexBox(RatInterval(std::max(a.re.lo, b.re.lo), std::min(a.re.hi, b.re.hi)),
                      RatInterval(std::max(a.im.lo, b.im.lo), std::min(a.im.hi, b.im.hi)));
}

ComplexBox cb_eval_poly(const std::vector<Rat>& coeffs, const ComplexBox& z, long prec) {
    ComplexBox acc = ComplexBox::point(Rat(0), Rat(0));
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = cb_mul(acc, z, prec);
        acc = cb_add(acc, ComplexBox::point(coeffs[i], Rat(0)), prec);
    }
    return acc;
}

ComplexBox cb_eval_poly_point(const std::vector<Rat>& coeffs, const Rat& re, const Rat& im) {
    Rat ar(0), ai(0);
    for (size_t i = coeffs.size(); i-- > 0;) {
        Rat nr = ar * re - ai * im + coeffs[i];
        Rat ni = ar * im + ai * re;
        ar = nr;
        ai = ni;
    }
    return ComplexBox::point(ar, ai);
}

}  // namespace milnor
