#pragma once

// Exact integer and rational arithmetic used everywhere in the library.
// All probabilities, characters, and series coefficients are carried as
// arbitrary-precision rationals; nothing numeric ever passes through a double
// except explicitly labelled diagnostic output.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genusforge {

using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

// Extracts the integer value of a rational known to be integral.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::logic_error("to_integer: rational is not an integer");
    return r.get_num();
}

// 2^e for any integer e, including negative exponents.
inline Rat pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    return make_rat(Int(1), p);
}

// Canonical "num/den" rendering; the denominator is always printed, so whole
// numbers come out as "2/1" and zero as "0/1".
inline std::string fraction_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Fixed-point decimal with the requested number of fractional digits, rounded
// half away from zero. Used only for the optional human-readable columns.
inline std::string decimal_string(const Rat& r, int digits) {
    if (digits < 0) throw std::domain_error("decimal_string: negative digit count");
    Int num = r.get_num();
    Int den = r.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int scaled = num * scale;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    if (2 * rem >= den) q += 1;
    Int whole = q / scale;
    Int frac = q % scale;
    std::string out = whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<size_t>(digits) - f.size(), '0') + f;
    }
    if (negative && q != 0) out = "-" + out;
    return out;
}

}  // namespace genusforge
