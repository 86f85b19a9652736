#pragma once

// Thin aliases and helpers over GMP's C++ classes. All arithmetic in this
// project is exact; there is no floating-point fallback anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxdet {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Exact integer quotient; throws if the division leaves a remainder.
inline Int divexact(const Int& a, const Int& b, const char* ctx = "divexact") {
    if (b == 0) throw std::domain_error(std::string(ctx) + ": division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error(std::string(ctx) + ": inexact division");
    return q;
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long to_long(const Int& n, const char* ctx = "to_long") {
    if (!n.fits_slong_p()) throw std::overflow_error(std::string(ctx) + ": out of long range");
    return n.get_si();
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace maxdet
