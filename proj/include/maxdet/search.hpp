#pragma once

// Certified maximal-determinant search: candidate Gram enumeration with the
// extended Moyssiadis-Kounias pruning bound, elimination of candidates by
// arithmetic obstructions, brute-force oracles, Hadamard-submatrix clique
// search inside Paley cores, and quadratic-residue pattern search.

#include <optional>
#include <string>
#include <vector>

#include "maxdet/matrix.hpp"

namespace maxdet {

// The set Phi of values realizable as inner products of two rows of an
// n x n matrix over the m-th roots of unity (all sums of n such roots),
// together with the global lower bound c on the modulus of its elements.
// Requires an order where no n roots sum to zero (sigma_m(n) > 0), so that
// c = sigma_m(n) = 1 for m in {2,3,4,6}; the pruning bound needs c > 0.
struct CandidateSet {
    unsigned m = 0;
    unsigned n = 0;
    Int c;
    std::vector<CycInt> phi;      // descending |.|^2, then lex on coefficients
    std::vector<Int> phi_abs2;    // |phi[i]|^2

    static CandidateSet make(unsigned n, unsigned m);
};

struct PruneBound {
    Int d_hat;  // max det [[D, gamma], [gamma*, c]] over gamma in Phi^r
    Int bound;  // (n-c)^{l-r-1} [(n-c) det(D) + (l-r) max(0, d_hat)]
};

// Upper bound on det(M) for any l x l Hermitian positive-definite extension
// M of D with diagonal n and entries in Phi. d_hat is exhaustive over Phi^r
// for r <= r_max (and |Phi|^r within a fixed work budget); otherwise a
// documented monotone over-estimate is used, which only weakens the bound
// and never invalidates it.
PruneBound mk_bound(const GramMatrix& D, const CandidateSet& candidates, unsigned ell,
                    unsigned r_max = 6);

// All Gram matrices of order n with diagonal n, off-diagonal entries in Phi,
// Hermitian positive-definite, and det >= det_lower_sq, up to m-isomorphism
// (simultaneous permutation and diagonal unit conjugation). Depth-first
// extension with mk_bound pruning; complete by the soundness of the bound.
std::vector<GramMatrix> gram_enumerate(unsigned n, unsigned m, const Int& det_lower_sq);

enum class ElimReason { NORM_OBSTRUCTION, DIVISIBILITY, CHARPOLY, REALIZED_SMALLER };
std::string elim_reason_str(ElimReason r);

struct Elimination {
    GramMatrix g;
    Int det_sq;
    ElimReason reason;
};

struct Certificate {
    unsigned n = 0;
    unsigned m = 0;
    Int target_det_sq;
    std::vector<GramMatrix> survivors;
    std::vector<Elimination> eliminations;
    bool certified() const { return survivors.empty(); }
};

// Prove that target has maximal |det|^2 among n x n matrices over the m-th
// roots: enumerate all candidate Grams with strictly larger determinant and
// eliminate each by (a) the quadratic-field norm obstruction on the
// squarefree part of the determinant, (b) power-of-prime divisibility of the
// determinant, or (c) charpoly coefficient divisibility. Empty survivors
// certify maximality.
Certificate certify_max(unsigned n, unsigned m, const RootMatrix& target);

// Independent brute-force oracle: exact maximum of |det|^2 over all n x n
// matrices with entries in the m-th roots, plus one witness. Dephases the
// first row and column (monomial-equivalence-safe) and enumerates the rest.
struct MaxdetResult {
    Int det_sq;
    RootMatrix witness;
};
MaxdetResult exhaustive_maxdet(unsigned n, unsigned m);

// Canonical key of a Hermitian matrix under simultaneous row/column
// permutation and diagonal unit conjugation (brute force; n <= 8).
std::string canonical_gram_key(const CMat& g, unsigned m);

struct Graph {
    size_t n = 0;
    std::vector<std::vector<bool>> adj;
};

// Adjacency iff the +-1 rows have zero inner product.
Graph orth_graph(const std::vector<std::vector<int>>& rows);

// A clique of size k found by deterministic branch-and-bound, or nullopt.
std::optional<std::vector<size_t>> max_clique(const Graph& g, size_t k);

// Search for an h x h Hadamard submatrix of the Paley core of prime p:
// pick h random columns, restrict up to row_sample random disjoint rows to
// them, and look for a K_h in the orthogonality graph. The returned index
// sets are always re-verified (Gram = hI) before being returned.
struct PaleySubmatrix {
    std::vector<unsigned> rows, cols;
};
std::optional<PaleySubmatrix> paley_submatrix(unsigned p, unsigned h, unsigned row_sample,
                                              unsigned long long seed,
                                              unsigned max_attempts = 200);

// Smallest r in {0..p-1} with legendre(r+a, p) = +1 for all a in plus and
// -1 for all a in minus (every shift nonzero mod p), or nullopt.
std::optional<unsigned> residue_pattern(unsigned p, const std::vector<unsigned>& plus,
                                        const std::vector<unsigned>& minus);

}  // namespace maxdet
