#pragma once

// Rational quadratic forms: diagonalization by congruence, local Hilbert
// symbols, Hasse-Minkowski and Hasse-Pall invariants, and the rational
// Gram-matrix feasibility test.

#include <optional>
#include <string>
#include <vector>

#include "maxdet/matrix.hpp"
#include "maxdet/numtheory.hpp"

namespace maxdet {

// A place of Q: an odd prime, 2, or the archimedean place.
struct Place {
    enum Kind { PRIME, TWO, INFINITE } kind;
    Int p;  // valid for PRIME (odd prime)

    static Place prime(const Int& q) { return q == 2 ? Place{TWO, 2} : Place{PRIME, q}; }
    static Place two() { return {TWO, 2}; }
    static Place infinity() { return {INFINITE, 0}; }
    std::string str() const;
};

struct QuadForm {
    size_t n = 0;
    QMat a;  // symmetric n x n

    static QuadForm from(const QMat& m);
    static QuadForm alpha_beta(const Rat& alpha, const Rat& beta, size_t d);  // alpha I + beta J
    static QuadForm diagonal(const std::vector<Rat>& d);
    bool is_symmetric() const;
    Rat det() const;
};

struct DiagonalForm {
    std::vector<Rat> diag;  // all nonzero
    QMat transform;         // T with T^t Q T = diag(diag)
};

// Congruence diagonalization of a regular symmetric form; throws on
// singular input. The returned transform satisfies the identity exactly.
DiagonalForm polarize(const QuadForm& q);

// Local Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_local(const Rat& a, const Rat& b, const Place& v);

// Hasse-Minkowski invariant of a diagonal form: prod_{i<j} (a_i, a_j)_v.
int hm_invariant(const DiagonalForm& d, const Place& v);

// Hasse-Pall invariant from leading principal minors (no diagonalization):
// c_v(A) = (-1, -delta_n)_v prod_{i=1}^{n-1} (delta_i, -delta_{i+1})_v.
// Requires all leading principal minors nonzero.
int pall_invariant(const QuadForm& q, const Place& v);

// Closed form for eps_v(alpha I_d + beta J_d):
//   ((alpha+beta d) d, alpha^{d-1} d)_v (alpha,-1)_v^C(d-1,2)
//   (alpha,d)_v^d (d-1,d)_v.
int alpha_beta_invariant(const Rat& alpha, const Rat& beta, unsigned long d, const Place& v);

// Odd primes at which the invariant of this diagonal form could be -1
// (those dividing some numerator or denominator of the entries).
std::vector<Int> relevant_odd_primes(const DiagonalForm& d);

struct RationalGramReport {
    bool feasible;
    // on failure, exactly one of these describes the obstruction:
    bool det_not_square = false;
    std::optional<Int> bad_prime;  // eps_p = -1 here
    std::string describe() const;
};

// Decides whether a symmetric positive-definite rational Q equals X X^t for
// some rational X: det must be a square and eps_p = +1 at every odd prime.
RationalGramReport is_rational_gram(const QuadForm& q);

}  // namespace maxdet
