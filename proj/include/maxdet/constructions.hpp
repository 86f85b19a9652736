#pragma once

#include <array>
#include <vector>

#include "maxdet/matrix.hpp"
#include "maxdet/numtheory.hpp"

namespace maxdet {

// A pair of +-1 circulant matrices R, S of odd order n satisfying
// R R^T + S S^T = (2n-2) I + 2 J, the Gram identity carried by the two
// diagonal blocks of a skew Ehlich--Wojtas matrix [[R, S], [-S, R]].
struct CirculantPair {
    size_t n = 0;
    std::vector<int> rowR, rowS;  // first rows, entries +-1

    // Validates entries and the Gram identity; throws on failure.
    static CirculantPair make(std::vector<int> r, std::vector<int> s);
};

// Generalised Hadamard matrix GH(q, G) where G is the additive group of
// the field with q elements. Entries are field-element codes 0..q-1; the
// GH property (all between-row difference lists cover G uniformly) is
// checked on construction.
struct GhMatrix {
    unsigned q = 0;
    std::vector<unsigned> invariant_factors;          // of the group G
    std::vector<std::vector<unsigned>> entries;       // q x q

    static GhMatrix make(unsigned q, std::vector<std::vector<unsigned>> entries);
};

// Results carrying a matrix together with the symbolically-computed
// value of |det|^2.
struct MatrixWithDet {
    RootMatrix mat;
    Int det_abs2;
};

// --- Hadamard-family constructors. Every function verifies the Gram
// --- identity of its output and throws std::runtime_error on failure.

// F_n with entries zeta_n^{ij}; a BH(n, n).
RootMatrix fourier(size_t n);

// H1 (x) H2, a BH(n1*n2, lcm(m1, m2)).
RootMatrix kronecker(const RootMatrix& H1, const RootMatrix& H2);

// Paley core Q over F_q, q = 1 (mod m): Q[x,y] = chi(x - y) for the
// order-m multiplicative character chi, with zero diagonal.
// Q Q^* = q I - J and Q J = J Q = 0.
RootMatrix paley_core(unsigned q, unsigned m);

// Generalised weighing matrix GW(q+1, q; m): the Paley core bordered by
// a row and column of ones with a zero corner.
RootMatrix gw_paley(unsigned q, unsigned m);

// BH(q+1, 4) for q = 1 (mod 4): the quadratic-residue core Q scaled by i,
// with -1 on the diagonal, bordered by ones.
RootMatrix complex_paley(unsigned q);

// BH(2p, p) for odd primes p, built from the Fourier matrix and the
// quadratic Gauss sum; entries realised in closed form.
RootMatrix butson_2p(unsigned p);

// BH(4p, p) from a residue triple (alpha, beta, gamma). The nine
// quadratic-residue conditions are validated; the error message names
// the first violated condition.
RootMatrix dawson_4p(unsigned p, std::array<unsigned, 3> triple);

// GH(q, (F_q, +)) as the field multiplication table.
GhMatrix gh_field(unsigned q);

// Scarpis composition: dephased H in BH(n+1, m) and a GH(n, G) with
// all-identity first row give a BH(n(n+1), m).
RootMatrix scarpis(const RootMatrix& H, const GhMatrix& G);

// Bush-type BH(n^2, m) with constant row and column sum n, from a
// dephased BH(n, m): block-circulant of rank-one row projections.
RootMatrix bush(const RootMatrix& H);

// Borders a constant-row-sum Hadamard matrix with a row and column of
// ones; |det|^2 = (n + 1 - 2 Re(s)) * n^n.
MatrixWithDet border(const RootMatrix& H);

// Dephases H in BH(n+1, m) and strips the first row and column;
// |det C|^2 = (n+1)^{n-1}.
MatrixWithDet core(const RootMatrix& H);

// Real Hadamard matrix of order 2n from H = A + iB in BH(n, 4):
// [[A+B, -A+B], [A-B, A+B]]. det = 2^n |det H|^2.
RootMatrix turyn(const RootMatrix& H);

// Real Hadamard matrix of order 4n from an unreal BH(n, 6) (all entries
// in {+-w, +-w^2}), replacing entries by fixed 4x4 +-1 blocks.
RootMatrix ccdl(const RootMatrix& H);

// Fourth-root Barba matrix B = (R - S)/2 + i (R + S)/2 of odd order n
// with B B^* = (n-1) I + J.
RootMatrix barba_from_circulant_ew(const CirculantPair& pair);

// Skew Ehlich--Wojtas matrix [[B, B], [-B, B]] of order 2n from a real
// Barba matrix B (B B^T = (n-1) I + J).
RootMatrix ew_from_barba(const RootMatrix& B);

// Scaled exterior powers: for real Hadamard H of order n,
// k=2 gives W(C(n,2), n^2/4) and k=3 gives W(C(n,3), n^3/16).
RootMatrix wedge_weighing(const RootMatrix& H, unsigned k);

// For H in BH(n, 3), the second exterior power divided by sqrt(-3)
// gives a GW(C(n,2), n^2/3; 6).
RootMatrix gw_from_bh3(const RootMatrix& H);

// q-1 mutually orthogonal Latin squares of order q from GH(q, (F_q,+))
// via the regular representation; symbols 1..q.
std::vector<std::vector<std::vector<unsigned>>> mols_from_gh(unsigned q);

// --- Helpers.

// Canonical dephasing: divide row i by entry (i,0), then column j by
// entry (0,j). Requires a zero-free matrix.
RootMatrix dephase(const RootMatrix& H);

// Gram checks.
bool is_hadamard(const RootMatrix& H);               // H H^* = n I
bool is_weighing(const RootMatrix& W, const Int& w); // W W^* = w I

// Maps a CycInt that is zero or a root of unity to its exponent
// (ZERO_ENTRY for zero); throws if it is neither.
int root_exponent(const CycInt& z, unsigned m);

}  // namespace maxdet
