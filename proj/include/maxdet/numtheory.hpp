#pragma once

// Integer and finite-field number theory shared by the feasibility tests and
// the matrix constructions.

#include <optional>
#include <utility>
#include <vector>

#include "maxdet/bigint.hpp"

namespace maxdet {

struct Factorization {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // sorted by prime
};

bool is_prime(const Int& n);

// Complete factorization by trial division plus Pollard rho (Miller-Rabin
// certified factors). Inputs at our scales stay far below 10^12.
Factorization factorize(const Int& n);

// n = a^2 * m with m squarefree.
std::pair<Int, Int> squarefree_split(const Int& n);

// Legendre symbol (a|p) for an odd prime p.
int legendre(const Int& a, const Int& p);

// True iff some power of q is congruent to -1 modulo p^f (q "self-conjugate"
// modulo p^f).
bool is_self_conjugate(const Int& q, const Int& p, unsigned f);

// Sum-of-two-squares decision via the factorization criterion; when feasible
// also returns a witness (x, y) with x^2 + y^2 = n.
struct TwoSquares {
    bool possible;
    Int x, y;
};
TwoSquares sum_two_squares(const Int& n);

// The unique (c, d >= 0) with 4p = c^2 + 27 d^2 and c = 1 (mod 3), for a
// prime p = 1 (mod 3).
struct CubicDecomp {
    Int p, c, d;
};
CubicDecomp solve_c27d(const Int& p);

// Small finite field F_q for prime q or one of the supported prime powers
// {4, 8, 9, 16, 25, 27, 32, 49, 64, 81}. Elements are indices 0..q-1 with 0
// as the additive and 1 as the multiplicative identity.
class SmallField {
  public:
    explicit SmallField(unsigned q);

    unsigned size() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return f_; }
    unsigned primitive_element() const { return generator_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg_[b]); }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, unsigned long e) const;
    // Discrete log base the primitive element; a != 0.
    unsigned dlog(unsigned a) const;
    bool is_square(unsigned a) const;  // a nonzero quadratic residue test

  private:
    unsigned q_, p_, f_, generator_;
    std::vector<unsigned> add_, mul_, neg_, dlog_;
};

}  // namespace maxdet
