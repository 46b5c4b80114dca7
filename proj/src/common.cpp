#include "milnor/common.hpp"

#include <cctype>

namespace milnor {

Rat dyadic_floor(const Rat& v, long prec) {
    Int num = v.get_num();
    Int den = v.get_den();
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    Rat result(q);
    Int one(1);
    Int pow2;
    mpz_mul_2exp(pow2.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(prec));
    result /= Rat(pow2);
    result.canonicalize();
    return result;
}

Rat dyadic_ceil(const Rat& v, long prec) { return -dyadic_floor(-v, prec); }

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw input_error("empty number literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw input_error("malformed rational '" + text + "'");
        Rat r;
        if (r.set_str(ns + "/" + ds, 10) != 0) throw input_error("malformed rational '" + text + "'");
        if (r.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string ip = text.substr(0, dot);
        std::string fp = text.substr(dot + 1);
        if (fp.empty() && ip.empty()) throw input_error("malformed number '" + text + "'");
        for (char c : ip)
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+')
                throw input_error("malformed number '" + text + "'");
        for (char c : fp)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw input_error("malformed number '" + text + "'");
        bool neg = !ip.empty() && ip[0] == '-';
        std::string digits = ip;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits = digits.substr(1);
        digits += fp;
        if (digits.empty()) throw input_error("malformed number '" + text + "'");
        Int num(digits, 10);
        Int den(1);
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rat r(num, den);
        r.canonicalize();
        return neg ? Rat(-r) : r;
    }
    Rat r;
    if (r.set_str(text, 10) != 0) throw input_error("malformed integer '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_decimal(const Rat& q, int digits) {
    bool neg = q < 0;
    Rat a = rat_abs(q);
    Int scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled_num = a.get_num() * scale;
    Int whole;
    mpz_fdiv_q(whole.get_mpz_t(), scaled_num.get_mpz_t(), a.get_den().get_mpz_t());
    std::string s = whole.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    // trim trailing zeros but keep at least one fractional digit
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;
    s.erase(last + 1);
    return (neg && a != 0) ? "-" + s : s;
}

}  // namespace milnor
