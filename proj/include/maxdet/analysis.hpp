#pragma once

// Determinant bounds (Hadamard, Barba, Ehlich-Wojtas, Ehlich), Gram-matrix
// classification, power-of-prime divisibility checks, and the exact closed
// form for the determinant of the Paley core shifted by a third root of
// unity. Everything is computed in exact arithmetic; bounds are kept squared
// so no square roots ever appear.

#include <string>
#include <vector>

#include "maxdet/matrix.hpp"
#include "maxdet/numtheory.hpp"

namespace maxdet {

// sigma(m, n): the minimal modulus of a sum of n m-th roots of unity, among
// the sums of nonzero modulus... except that by convention the minimum is
// taken over all sums and equals 0 when n roots can cancel exactly. Closed
// forms exist for m in {2, 3, 4, 6}:
//   m=2: n mod 2        m=3: 0 if 3|n else 1
//   m=4: 0 if 2|n else 1   m=6: 0 for all n>1
// Throws for other m (use sigma_general_sq).
Int sigma(unsigned m, unsigned n);

// Squared modulus of the minimal-modulus sum of n m-th roots of unity, by
// exhaustive search over root multisets. The value is an algebraic number
// returned exactly as z * conj(z) in Z[zeta_m]; for m=5, n=2 it is
// |zeta_5 + zeta_5^4|^2 = (3-sqrt(5))/2, the squared reciprocal golden
// ratio. Throws when n exceeds the cap (the search is combinatorial).
CycInt sigma_general_sq(unsigned m, unsigned n, unsigned cap = 16);

struct BoundReport {
    unsigned n = 0;
    unsigned m = 0;
    Int sigma;         // sigma_m(n)
    Int hadamard_sq;   // n^n
    Int barba_sq;      // (n + (n-1)s)(n - s)^{n-1}, s = sigma_m(n)
    Int ew_sq;         // (2n-2)^2 (n-2)^{n-2}; 0 for n < 2
    bool ehlich_applicable = false;  // n = 3 mod 4 and n >= 63
    Rat ehlich_sq;     // 4 * 11^6 / 7^7 * n (n-1)^6 (n-3)^{n-7} when applicable
    std::string applicable;  // name of the bound governing n's class
};

// All squared determinant bounds at order n over the m-th roots. When
// sigma_m(n) = 0 the Barba bound degenerates to the Hadamard bound n^n.
BoundReport bounds(unsigned n, unsigned m);

// Determinant of the block matrix with diagonal entries n, off-diagonal
// entries 3 within blocks of sizes parts[0], ..., parts[s-1], and -1 across
// blocks:
//   (n-3)^{m-s} * prod_i (n-3+4 r_i) * (1 - sum_i r_i / (n-3+4 r_i))
// where m = sum parts. Exact rational (always an integer in fact).
Rat ehlich_block_det(unsigned n, const std::vector<unsigned>& parts);

struct GramClass {
    enum Kind { HADAMARD, BARBA, EW, EHLICH_D, GW, OTHER };
    Kind kind = OTHER;
    unsigned param = 0;  // block count m for EHLICH_D, weight w for GW
    std::string detail;  // structural notes, mainly for OTHER
    std::string str() const;
    bool operator==(const GramClass& o) const { return kind == o.kind && param == o.param; }
};

// Pattern-match a Hermitian Gram matrix up to simultaneous row/column
// permutation:
//   HADAMARD    nI
//   GW(w)       wI with w < n
//   BARBA       (n-1)I + J
//   EW          two diagonal blocks (n-2)I + 2J of size n/2, zero across
//   EHLICH_D(m) ((7m-3)I_m + 4J_m) tensor I_7 - J_{7m}, n = 7m
//   OTHER       anything else (detail reports the off-diagonal values)
GramClass classify_gram(const GramMatrix& G);

// Parse a tag as produced by GramClass::str(), e.g. "BARBA", "GW(12)",
// "EHLICH_D(2)". Throws on malformed input.
GramClass parse_gram_class(const std::string& tag);

struct DivisibilityReport {
    Int det_sq;                // |det M|^2
    Int base;                  // 3 for m=3, 2 for m=4, 4 for m in {1,2}
    bool det_ok = false;       // base^{n-1} divides det_sq
    bool charpoly_ok = false;  // base^{i-1} divides a_i for all i
    std::vector<Int> charpoly; // [1, a_1, ..., a_n] of the Gram matrix
    bool ok() const { return det_ok && charpoly_ok; }
};

// Check the divisibility constraints satisfied by every genuine root-of-
// unity matrix: base^{n-1} | |det|^2 and base^{i-1} | a_i for the Gram
// characteristic polynomial x^n + a_1 x^{n-1} + ... + a_n, where the base is
// 3 (third roots), 2 (fourth roots), or 4 (entries +-1). A failure signals
// that M cannot be a matrix of the claimed kind.
DivisibilityReport divisibility_check(const RootMatrix& M);

struct PaleyAnalysis {
    Int p;                 // prime, p = 1 mod 3
    Int c, d;              // 4p = c^2 + 27 d^2, c = 1 mod 3
    // The Gaussian periods eta_0, eta_1, eta_2 of the cubic residue classes
    // are the roots of x^3 + x^2 + cubic_a1 x + cubic_a0:
    //   cubic_a1 = -(p-1)/3,  cubic_a0 = -(p c + 3p - 1)/27.
    // In particular eta_0 + eta_1 + eta_2 = -1.
    Int cubic_a1, cubic_a0;
    Int base;              // (p+2)^3 - 3(p+2)^2 - 3(p-1)(p+2) + (3+c)p - 1
    Int det_sq;            // |det(Q + w I_p)|^2 = base^{(p-1)/3}
    Int bordered_det_sq;   // (p^2 + p + 1) * base^{(p-1)/3}
};

// Exact determinant of the cubic Paley core Q of order p shifted by a
// primitive third root of unity on the diagonal. The closed form (which
// uses only the cubic decomposition 4p = c^2 + 27 d^2) is recomputed by a
// direct determinant over Z[zeta_3] and the two are asserted equal.
PaleyAnalysis paley_det(const Int& p);

struct VerifyResult {
    bool ok = false;
    std::string diagnostics;
};

// Recompute the structure claimed for M and compare. Accepted claims are
// the classify_gram tags plus "MAXDET(v)", which checks |det M|^2 == v (a
// record value, not a maximality certificate).
VerifyResult verify(const RootMatrix& M, const std::string& claim);

}  // namespace maxdet
