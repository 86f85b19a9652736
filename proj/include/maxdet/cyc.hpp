#pragma once

// Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{m-1} with the
// coefficient vector kept in canonical form: reduced modulo the m-th
// cyclotomic polynomial Phi_m, so all coefficients of degree >= phi(m) are
// zero. Canonical forms are unique, so equality is coefficient-wise.

#include <cassert>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

// Integer polynomial utilities used by the canonicalizer (dense, ascending
// degree, no trailing-zero guarantee).
using IntPoly = std::vector<Int>;

// Phi_m as a dense coefficient vector, computed by dividing x^m - 1 by the
// product of Phi_d over proper divisors d | m. Results are cached per m.
const IntPoly& cyclotomic_poly(unsigned m);

unsigned euler_phi(unsigned m);

class CycInt {
  public:
    CycInt() : m_(1), c_(1, Int(0)) {}
    explicit CycInt(unsigned m) : m_(check_order(m)), c_(m, Int(0)) {}
    CycInt(unsigned m, const Int& rational) : CycInt(m) { c_[0] = rational; canonicalize(); }

    // zeta_m^k
    static CycInt root(unsigned m, long k);
    // Canonical element from an arbitrary coefficient sequence (reduced
    // modulo x^m - 1 first, then modulo Phi_m).
    static CycInt from_coeffs(unsigned m, const std::vector<Int>& coeffs);

    unsigned order() const { return m_; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const;
    // True when the canonical form lies in Z (only the constant coefficient
    // may be nonzero).
    bool is_rational() const;
    Int to_int() const;  // throws unless is_rational()

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    CycInt& operator*=(const Int& k);
    friend CycInt operator*(CycInt a, const Int& k) { return a *= k; }
    friend CycInt operator*(const Int& k, CycInt a) { return a *= k; }

    bool operator==(const CycInt& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    // Complex conjugation: zeta^k -> zeta^{m-k}.
    CycInt conj() const;
    // Galois action zeta -> zeta^k, gcd(k, m) = 1.
    CycInt galois(unsigned k) const;
    // z * conj(z) as a rational integer. Only valid for m in {1,2,3,4,6}
    // (the orders whose ring is imaginary quadratic or Z); use abs2_cyc for
    // general m.
    Int abs2() const;
    // z * conj(z) as a cyclotomic integer (asserted conjugation-fixed).
    CycInt abs2_cyc() const;
    // Field norm down to Q: product over the Galois orbit. Always in Z.
    Int norm() const;

    // Exact quotient; throws if o does not divide *this in Z[zeta_m].
    CycInt divide_exact(const CycInt& o) const;
    // Coefficient-wise exact division by a rational integer.
    CycInt divide_exact(const Int& k) const;

    // For m in {1,2,3,4,6} the maximal real subring is Z; elements fixed by
    // conjugation are rational and can be sign-compared exactly.
    int sign_real() const;  // throws unless rational

    std::string str() const;  // human-readable, e.g. "1 - 2*z^2"

  private:
    static unsigned check_order(unsigned m);
    void canonicalize();

    unsigned m_;
    std::vector<Int> c_;  // length m_, canonical
};

// Promote a value of order dividing target_m into Z[zeta_{target_m}].
CycInt promote(const CycInt& z, unsigned target_m);

}  // namespace maxdet
