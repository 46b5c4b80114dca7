#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace milnor {

using Int = mpz_class;
using Rat = mpq_class;

/// Malformed user input (bad expression, constant polynomial, bad flag values).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cross-check between two independent computation routes failed.
/// Nothing is silently preferred; callers surface the full message.
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violation that indicates a bug (exhausted shear budget,
/// impossible state), not a property of the input.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The input has non-isolated singularities; the invariants are undefined.
struct nonisolated_error : std::runtime_error {
    explicit nonisolated_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Power with non-negative integer exponent.
inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Largest multiple of 2^-prec that is <= v.
Rat dyadic_floor(const Rat& v, long prec);
/// Smallest multiple of 2^-prec that is >= v.
Rat dyadic_ceil(const Rat& v, long prec);

/// Exact rational parsed from "a", "a/b" or a decimal like "0.125".
Rat rat_from_string(const std::string& text);

/// "num/den" (or just "num" when den == 1).
std::string rat_to_string(const Rat& q);

/// Decimal approximation with the given number of fractional digits,
/// correctly truncated toward zero. Convenience only, never used in math.
std::string rat_to_decimal(const Rat& q, int digits = 12);

}  // namespace milnor
