#pragma once

// Design-theoretic and cyclotomic nonexistence tests: Bruck-Ryser-Chowla,
// Bose-Connor (with the group-divisible-design infeasibility tables), the
// Ehlich-bound symbol test at orders 7m, Butson-type and quaternary-unit
// Hadamard obstructions, and Barba-bound obstructions over the third and
// fourth roots of unity.

#include <string>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

enum class Verdict { FEASIBLE_UNKNOWN, INFEASIBLE, NOT_APPLICABLE };

// Tagged infeasibility certificate. Every INFEASIBLE reason carries enough
// data to be re-checked independently:
//   NON_SQUARE      value is not a perfect square (label names the quantity)
//   SYMBOL          the local invariant at the odd prime `prime` equals -1
//   SELF_CONJUGATE  prime^t = -1 (mod modulus) for the returned t
//   SUM2SQ          value is not a sum of two integer squares
//   NORM            norm obstruction at the odd prime `prime` (prime
//                   splitting in the relevant field extension), or a plain
//                   divisibility failure when t == 0
struct FeasibilityReport {
    Verdict verdict = Verdict::FEASIBLE_UNKNOWN;
    enum class Reason { NONE, NON_SQUARE, SYMBOL, SELF_CONJUGATE, SUM2SQ, NORM } reason =
        Reason::NONE;
    std::string label;  // name of the offending quantity, e.g. "mu", "2n-1"
    Int value = 0;      // NON_SQUARE / SUM2SQ quantity
    Int prime = 0;      // SYMBOL / SELF_CONJUGATE / NORM prime
    Int modulus = 0;    // SELF_CONJUGATE modulus p^f
    Int t = 0;          // SELF_CONJUGATE exponent: prime^t = -1 (mod modulus)

    static FeasibilityReport unknown() { return {}; }
    bool infeasible() const { return verdict == Verdict::INFEASIBLE; }

    // Compact table form: "mu=5", "nu=12", or "p=3".
    std::string short_reason() const;
    std::string describe() const;
};

// Symmetric regular group divisible design parameters: m groups of size n,
// replication r, intersection indices lambda1 (same group) and lambda2
// (different groups).
struct GddParams {
    long n = 0, m = 0, r = 0, lambda1 = 0, lambda2 = 0;

    Int mu() const { return Int(r) * r - Int(n) * m * lambda2; }
    Int nu() const { return Int(r) - lambda1; }
    // (n-1) lambda1 + n(m-1) lambda2 = r(r-1), nu > 0, mu > 0.
    bool valid() const;
};

// Bruck-Ryser-Chowla test for a symmetric 2-(v,k,lambda) design.
FeasibilityReport brc(long v, long k, long lambda);

// Orders n <= limit with n = 1,2 (mod 4) excluded by BRC for projective
// planes (n not a sum of two squares).
std::vector<long> plane_orders_blocked(long limit);

// Bose-Connor test for symmetric regular GDD parameters; the reported
// SYMBOL prime is the smallest odd prime with local invariant -1.
FeasibilityReport bose_connor(const GddParams& params);

struct GddRow {
    GddParams params;
    FeasibilityReport report;
};

// Enumeration ranges for gdd_scan. Residue constraints apply on top of the
// inclusive bounds; lambda1 is forced to zero when resolvable is set, and
// r_square keeps only parameter sets with r a perfect square.
struct GddScanSpec {
    long n_min = 2, n_max = 0;
    long m_min = 2, m_max = 0;
    int n_mod = 1, n_res = 0;
    int m_mod = 1, m_res = 0;
    long lambda2 = 1;
    bool resolvable = false;
    bool r_square = false;
};

// All infeasible GDD parameter sets in range, sorted by (n, m, r).
std::vector<GddRow> gdd_scan(const GddScanSpec& spec);

// Feasibility of D(m) = ((7m-3) I_m + 4 J_m) (x) I_7 - J_{7m} as the Gram
// matrix of a +-1 matrix of order 7m: 4m-3 must be a square and
// (11m-3, -(7m-3))_p = 1 at every odd prime. m odd.
FeasibilityReport tamura(long m);

// Butson-type obstruction for BH(n, p^f) and BH(n, 2 p^f), n odd, p an odd
// prime: writing n = p^l a^2 m' with m' squarefree and coprime to p, no
// prime q | m' may be self-conjugate modulo p^f. For f = 1 the divisibility
// requirement p | n applies first.
FeasibilityReport butson_pf(long n, long p, unsigned f);

// Quaternary-unit Hadamard obstruction for QUH(n, m): with m = m0^2 a,
// m+1 = m0'^2 b (a, b squarefree) and n = n0^2 t odd, an odd prime p | t
// coprime to m(m+1) with (-a|p) = -1 and (b|p) = +1 blocks existence.
// Returns NOT_APPLICABLE when m or m+1 is a perfect square or n is even.
FeasibilityReport quh(long n, long m);

// Barba-bound obstruction over the third roots at n = 1 (mod 3): a prime
// p = 2 (mod 3) dividing the 3-free squarefree part of 2n-1 (or of n-1 when
// n is even) blocks existence.
FeasibilityReport barba3(long n);

// Barba-bound obstruction over the fourth roots at odd n: 2n-1 must be a
// sum of two integer squares.
FeasibilityReport barba4(long n);

}  // namespace maxdet
