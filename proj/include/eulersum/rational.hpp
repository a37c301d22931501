#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulersum {

// Exact rational coefficients everywhere; GMP does the heavy lifting.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Canonical "p" or "p/q" form.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool has_odd_denominator(const Rat& q) { return mpz_odd_p(q.get_den().get_mpz_t()) != 0; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow2_rat(long e) {
    Rat r = 1;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

}  // namespace eulersum
