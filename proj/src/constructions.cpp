#include "maxdet/constructions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace maxdet {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// Inner product of rows i and j of H, computed by tallying exponent
// differences and reducing mod the cyclotomic polynomial. Much faster
// than materialising CycInt entries for large orders.
CycInt row_inner(const RootMatrix& H, size_t i, size_t j) {
    std::vector<Int> counts(H.m, 0);
    for (size_t y = 0; y < H.n; ++y) {
        if (H.is_zero(i, y) || H.is_zero(j, y)) continue;
        int d = H.at(i, y) - H.at(j, y);
        if (d < 0) d += static_cast<int>(H.m);
        counts[static_cast<size_t>(d)] += 1;
    }
    return CycInt::from_coeffs(H.m, counts);
}

CycInt row_sum(const RootMatrix& H, size_t i) {
    std::vector<Int> counts(H.m, 0);
    for (size_t y = 0; y < H.n; ++y)
        if (!H.is_zero(i, y)) counts[static_cast<size_t>(H.at(i, y))] += 1;
    return CycInt::from_coeffs(H.m, counts);
}

void verify_scaled_identity(const RootMatrix& H, const Int& w, const char* what) {
    for (size_t i = 0; i < H.n; ++i) {
        require(row_inner(H, i, i) == CycInt(H.m, w),
                std::string(what) + ": diagonal Gram entry is not the weight");
        for (size_t j = i + 1; j < H.n; ++j)
            require(row_inner(H, i, j).is_zero(),
                    std::string(what) + ": rows " + std::to_string(i) + " and " +
                        std::to_string(j) + " are not orthogonal");
    }
}

// Smallest quadratic non-residue mod an odd prime p.
unsigned least_nonresidue(unsigned p) {
    for (unsigned s = 2; s < p; ++s)
        if (legendre(s, p) == -1) return s;
    fail("no quadratic non-residue found");
}

}  // namespace

int root_exponent(const CycInt& z, unsigned m) {
    if (z.is_zero()) return RootMatrix::ZERO_ENTRY;
    for (unsigned k = 0; k < m; ++k)
        if (z == CycInt::root(m, k)) return static_cast<int>(k);
    fail("entry is neither zero nor a root of unity");
}

bool is_hadamard(const RootMatrix& H) {
    for (size_t i = 0; i < H.n; ++i) {
        if (H.weighing)
            for (size_t y = 0; y < H.n; ++y)
                if (H.is_zero(i, y)) return false;
        for (size_t j = i + 1; j < H.n; ++j)
            if (!row_inner(H, i, j).is_zero()) return false;
    }
    return true;
}

bool is_weighing(const RootMatrix& W, const Int& w) {
    for (size_t i = 0; i < W.n; ++i) {
        if (!(row_inner(W, i, i) == CycInt(W.m, w))) return false;
        for (size_t j = i + 1; j < W.n; ++j)
            if (!row_inner(W, i, j).is_zero()) return false;
    }
    return true;
}

RootMatrix dephase(const RootMatrix& H) {
    require(!H.weighing, "dephase: input has zero entries");
    RootMatrix R(H.m, H.n);
    for (size_t i = 0; i < H.n; ++i)
        for (size_t j = 0; j < H.n; ++j)
            R.set(i, j, static_cast<long>(H.at(i, j)) - H.at(i, 0) - H.at(0, j) +
                            H.at(0, 0));
    return R;
}

RootMatrix fourier(size_t n) {
    require(n >= 1, "fourier: order must be positive");
    RootMatrix F(static_cast<unsigned>(n), n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            F.set(i, j, static_cast<long>((i * j) % n));
    verify_scaled_identity(F, Int(static_cast<long>(n)), "fourier");
    return F;
}

RootMatrix kronecker(const RootMatrix& H1, const RootMatrix& H2) {
    unsigned m = std::lcm(H1.m, H2.m);
    unsigned s1 = m / H1.m, s2 = m / H2.m;
    RootMatrix K(m, H1.n * H2.n, H1.weighing || H2.weighing);
    for (size_t i1 = 0; i1 < H1.n; ++i1)
        for (size_t j1 = 0; j1 < H1.n; ++j1)
            for (size_t i2 = 0; i2 < H2.n; ++i2)
                for (size_t j2 = 0; j2 < H2.n; ++j2) {
                    size_t r = i1 * H2.n + i2, c = j1 * H2.n + j2;
                    if (H1.is_zero(i1, j1) || H2.is_zero(i2, j2))
                        K.at(r, c) = RootMatrix::ZERO_ENTRY;
                    else
                        K.set(r, c, static_cast<long>(H1.at(i1, j1)) * s1 +
                                        static_cast<long>(H2.at(i2, j2)) * s2);
                }
    if (!K.weighing)
        verify_scaled_identity(K, Int(static_cast<long>(K.n)), "kronecker");
    return K;
}

RootMatrix paley_core(unsigned q, unsigned m) {
    require(m >= 2, "paley_core: m must be at least 2");
    require((q - 1) % m == 0, "paley_core: m does not divide q-1");
    SmallField F(q);
    RootMatrix Q(m, q, /*weighing=*/true);
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) {
            unsigned d = F.sub(x, y);
            if (d == 0)
                Q.at(x, y) = RootMatrix::ZERO_ENTRY;
            else
                Q.set(x, y, F.dlog(d) % m);
        }
    // Q Q^* = q I - J and vanishing row sums.
    for (size_t i = 0; i < Q.n; ++i) {
        require(row_sum(Q, i).is_zero(), "paley_core: row sum does not vanish");
        require(row_inner(Q, i, i) == CycInt(m, Int(static_cast<long>(q - 1))),
                "paley_core: bad diagonal Gram entry");
        for (size_t j = i + 1; j < Q.n; ++j)
            require(row_inner(Q, i, j) + CycInt(m, 1) == CycInt(m),
                    "paley_core: bad off-diagonal Gram entry");
    }
    return Q;
}

RootMatrix gw_paley(unsigned q, unsigned m) {
    RootMatrix Q = paley_core(q, m);
    RootMatrix W(m, q + 1, /*weighing=*/true);
    W.at(0, 0) = RootMatrix::ZERO_ENTRY;
    for (unsigned k = 0; k < q; ++k) {
        W.set(0, k + 1, 0);
        W.set(k + 1, 0, 0);
    }
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y)
            W.at(x + 1, y + 1) = Q.at(x, y);
    verify_scaled_identity(W, Int(q), "gw_paley");
    return W;
}

RootMatrix complex_paley(unsigned q) {
    require(q % 4 == 1, "complex_paley: q must be 1 mod 4");
    SmallField F(q);
    RootMatrix H(4, q + 1);
    for (unsigned k = 0; k <= q; ++k) {
        H.set(0, k, 0);
        H.set(k, 0, 0);
    }
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) {
            if (x == y)
                H.set(x + 1, y + 1, 2);  // i*0 - 1
            else
                H.set(x + 1, y + 1, F.is_square(F.sub(x, y)) ? 1 : 3);
        }
    verify_scaled_identity(H, Int(q + 1), "complex_paley");
    return H;
}

RootMatrix butson_2p(unsigned p) {
    require(p > 2 && is_prime(Int(p)), "butson_2p: p must be an odd prime");
    unsigned s = least_nonresidue(p);
    // Entries of the lower blocks: completing the square in the Gauss sum
    // gives exponent f(a, b) = -(4a)^{-1} b^2 mod p.
    Int two_pow = powmod(2, Int(p - 3), Int(p));
    auto f = [&](unsigned a, long b) -> long {
        Int ainv = powmod(Int(a), Int(p - 2), Int(p));
        long bm = ((b % p) + p) % p;
        Int v = ainv * two_pow % p * (bm * bm % p) % p;
        return -v.get_si();
    };
    RootMatrix H(p, 2 * static_cast<size_t>(p));
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            long ii = i, jj = j;
            H.set(i, j, ii * jj);
            H.set(i, p + j, static_cast<long>(s - 1) * ii * ii + ii * jj);
            H.set(p + i, j, f(1, jj - ii));
            H.set(p + i, p + j, f(s, jj - ii));
        }
    verify_scaled_identity(H, Int(2 * static_cast<long>(p)), "butson_2p");
    return H;
}

RootMatrix dawson_4p(unsigned p, std::array<unsigned, 3> triple) {
    require(p > 3 && is_prime(Int(p)), "dawson_4p: p must be a prime > 3");
    unsigned alpha = triple[0], beta = triple[1], gamma = triple[2];
    struct Cond {
        unsigned value;
        int want;
        const char* name;
    };
    const Cond conds[] = {
        {alpha + 1, +1, "(alpha+1|p) = +1"}, {beta + 4, +1, "(beta+4|p) = +1"},
        {gamma + 9, +1, "(gamma+9|p) = +1"}, {alpha + 4, -1, "(alpha+4|p) = -1"},
        {alpha + 9, -1, "(alpha+9|p) = -1"}, {beta + 1, -1, "(beta+1|p) = -1"},
        {beta + 9, -1, "(beta+9|p) = -1"},   {gamma + 1, -1, "(gamma+1|p) = -1"},
        {gamma + 4, -1, "(gamma+4|p) = -1"},
    };
    for (const Cond& c : conds)
        require(legendre(Int(c.value), Int(p)) == c.want,
                std::string("dawson_4p: residue condition ") + c.name + " violated");

    const long t[4] = {0, 1, 4, 9};
    const long a[4] = {0, alpha, beta, gamma};
    const int h4[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    Int two_pow = powmod(2, Int(p - 3), Int(p));
    auto f = [&](long av, long b) -> long {
        Int ainv = powmod(Int(av % p), Int(p - 2), Int(p));
        long bm = ((b % p) + p) % p;
        Int v = ainv * two_pow % p * (bm * bm % p) % p;
        return -v.get_si();
    };
    RootMatrix H(p, 4 * static_cast<size_t>(p));
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            for (unsigned x = 0; x < p; ++x)
                for (unsigned y = 0; y < p; ++y) {
                    size_t r = static_cast<size_t>(bi) * p + x;
                    size_t c = static_cast<size_t>(bj) * p + y;
                    long xx = x, yy = y;
                    if (bi == 0) {
                        H.set(r, c, a[bj] * xx * xx + xx * yy);
                    } else {
                        long av = (t[bi] + a[bj]) % p;
                        require(h4[bi][bj] * legendre(Int(av), Int(p)) == 1,
                                "dawson_4p: sign pattern does not cancel");
                        H.set(r, c, f(av, yy - xx));
                    }
                }
    verify_scaled_identity(H, Int(4 * static_cast<long>(p)), "dawson_4p");
    return H;
}

GhMatrix GhMatrix::make(unsigned q, std::vector<std::vector<unsigned>> entries) {
    SmallField F(q);
    require(entries.size() == q, "GhMatrix: wrong number of rows");
    for (const auto& row : entries) {
        require(row.size() == q, "GhMatrix: wrong row length");
        for (unsigned v : row) require(v < q, "GhMatrix: entry out of range");
    }
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = i + 1; j < q; ++j) {
            std::vector<unsigned> count(q, 0);
            for (unsigned k = 0; k < q; ++k) count[F.sub(entries[i][k], entries[j][k])]++;
            for (unsigned v = 0; v < q; ++v)
                require(count[v] == 1, "GhMatrix: difference lists are not uniform");
        }
    GhMatrix G;
    G.q = q;
    G.invariant_factors.assign(F.degree(), F.characteristic());
    G.entries = std::move(entries);
    return G;
}

GhMatrix gh_field(unsigned q) {
    SmallField F(q);
    std::vector<std::vector<unsigned>> e(q, std::vector<unsigned>(q));
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y) e[x][y] = F.mul(x, y);
    return GhMatrix::make(q, std::move(e));
}

RootMatrix scarpis(const RootMatrix& H, const GhMatrix& G) {
    size_t n = G.q;
    require(H.n == n + 1, "scarpis: |G| must equal the order of H minus one");
    require(!H.weighing, "scarpis: H has zero entries");
    for (unsigned k = 0; k < G.q; ++k)
        require(G.entries[0][k] == 0, "scarpis: first row of G is not the identity");
    RootMatrix Hd = dephase(H);
    SmallField F(G.q);
    // Core of H: exponents of the dephased matrix without row/column 0.
    auto C = [&](size_t x, size_t y) { return Hd.at(x + 1, y + 1); };

    RootMatrix K(H.m, n * (n + 1));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            K.set(x, y, 0);  // J_n block
            for (size_t j = 1; j <= n; ++j)
                K.set(x, j * n + y, C(x, j - 1));  // diag(k_j) J_n
        }
    for (size_t i = 1; i <= n; ++i)
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                K.set(i * n + x, y, C(i - 1, y));  // rows all equal to c_i
                for (size_t j = 1; j <= n; ++j) {
                    unsigned g = G.entries[i - 1][j - 1];
                    size_t xs = F.sub(static_cast<unsigned>(x), g);
                    K.set(i * n + x, j * n + y, C(xs, y));  // rho(m_ij) C
                }
            }
    verify_scaled_identity(K, Int(static_cast<long>(n * (n + 1))), "scarpis");
    return K;
}

RootMatrix bush(const RootMatrix& H) {
    require(!H.weighing, "bush: H has zero entries");
    size_t n = H.n;
    for (size_t k = 0; k < n; ++k)
        require(H.at(0, k) == 0 && H.at(k, 0) == 0, "bush: H is not dephased");
    RootMatrix M(H.m, n * n);
    for (size_t bi = 0; bi < n; ++bi)
        for (size_t bj = 0; bj < n; ++bj) {
            size_t d = (bi + n - bj) % n;
            for (size_t x = 0; x < n; ++x)
                for (size_t y = 0; y < n; ++y)
                    M.set(bi * n + x, bj * n + y,
                          static_cast<long>(H.at(d, y)) - H.at(d, x));
        }
    verify_scaled_identity(M, Int(static_cast<long>(n * n)), "bush");
    CycInt want(H.m, Int(static_cast<long>(n)));
    for (size_t i = 0; i < M.n; ++i)
        require(row_sum(M, i) == want, "bush: row sum is not n");
    return M;
}

MatrixWithDet border(const RootMatrix& H) {
    require(!H.weighing, "border: H has zero entries");
    size_t n = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n)), "border");
    CycInt s = row_sum(H, 0);
    for (size_t i = 1; i < n; ++i)
        require(row_sum(H, i) == s, "border: row sums are not constant");
    CycInt two_re = s + s.conj();
    require(two_re.is_rational(), "border: 2 Re(s) is not rational");
    Int r = two_re.to_int();

    RootMatrix M(H.m, n + 1);
    for (size_t k = 0; k <= n; ++k) {
        M.set(0, k, 0);
        M.set(k, 0, 0);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M.at(i + 1, j + 1) = H.at(i, j);
    Int det2 = (Int(static_cast<long>(n + 1)) - r) * ipow(Int(static_cast<long>(n)), n);
    return {M, det2};
}

MatrixWithDet core(const RootMatrix& H) {
    require(!H.weighing, "core: H has zero entries");
    size_t n1 = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n1)), "core");
    RootMatrix Hd = dephase(H);
    size_t n = n1 - 1;
    RootMatrix C(H.m, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) C.at(i, j) = Hd.at(i + 1, j + 1);
    // C C^* = (n+1) I - J.
    for (size_t i = 0; i < n; ++i) {
        require(row_inner(C, i, i) == CycInt(C.m, Int(static_cast<long>(n))),
                "core: bad diagonal Gram entry");
        for (size_t j = i + 1; j < n; ++j)
            require(row_inner(C, i, j) + CycInt(C.m, 1) == CycInt(C.m),
                    "core: bad off-diagonal Gram entry");
    }
    Int det2 = n1 >= 2 ? ipow(Int(static_cast<long>(n1)), n1 - 2) : Int(1);
    return {C, det2};
}

RootMatrix turyn(const RootMatrix& H) {
    require(H.m == 4 && !H.weighing, "turyn: input must be a BH(n,4)");
    size_t n = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n)), "turyn");
    // h = A + iB; blocks [[A+B, -A+B], [A-B, A+B]], each entry +-1.
    // Per fourth root: values of (A+B, -A+B, A-B).
    static const int tl[4] = {1, 1, -1, -1};
    static const int tr[4] = {-1, 1, 1, -1};
    static const int bl[4] = {1, -1, -1, 1};
    RootMatrix M(2, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int e = H.at(i, j);
            M.set(i, j, tl[e] == 1 ? 0 : 1);
            M.set(i, n + j, tr[e] == 1 ? 0 : 1);
            M.set(n + i, j, bl[e] == 1 ? 0 : 1);
            M.set(n + i, n + j, tl[e] == 1 ? 0 : 1);
        }
    verify_scaled_identity(M, Int(static_cast<long>(2 * n)), "turyn");
    return M;
}

RootMatrix ccdl(const RootMatrix& H) {
    require(H.m == 6 && !H.weighing, "ccdl: input must be a BH(n,6)");
    size_t n = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n)), "ccdl");
    static const int h4[4][4] = {
        {-1, 1, 1, 1}, {-1, -1, 1, -1}, {-1, -1, -1, 1}, {-1, 1, -1, -1}};
    RootMatrix M(2, 4 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int e = H.at(i, j);
            require(e != 0 && e != 3, "ccdl: input has a real entry");
            // zeta_6^2 = w -> H4, zeta_6^5 = -w -> -H4,
            // zeta_6^4 = w^2 -> H4^T, zeta_6^1 = -w^2 -> -H4^T.
            bool transpose = (e == 4 || e == 1);
            int sign = (e == 2 || e == 4) ? 1 : -1;
            for (int x = 0; x < 4; ++x)
                for (int y = 0; y < 4; ++y) {
                    int v = sign * (transpose ? h4[y][x] : h4[x][y]);
                    M.set(4 * i + x, 4 * j + y, v == 1 ? 0 : 1);
                }
        }
    verify_scaled_identity(M, Int(static_cast<long>(4 * n)), "ccdl");
    return M;
}

CirculantPair CirculantPair::make(std::vector<int> r, std::vector<int> s) {
    size_t n = r.size();
    require(n % 2 == 1 && s.size() == n, "CirculantPair: need equal odd lengths");
    for (size_t k = 0; k < n; ++k)
        require((r[k] == 1 || r[k] == -1) && (s[k] == 1 || s[k] == -1),
                "CirculantPair: entries must be +-1");
    for (size_t d = 1; d < n; ++d) {
        long ac = 0;
        for (size_t k = 0; k < n; ++k)
            ac += r[k] * r[(k + d) % n] + s[k] * s[(k + d) % n];
        require(ac == 2, "CirculantPair: Gram identity fails");
    }
    return CirculantPair{n, std::move(r), std::move(s)};
}

RootMatrix barba_from_circulant_ew(const CirculantPair& pair) {
    size_t n = pair.n;
    RootMatrix B(4, n);
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            // Conjugating the EW block form by the back-diagonal permutation
            // leaves R circulant and turns S into the symmetric back-circulant
            // of its first row; then (R - S)/2 + i (R + S)/2 is a fourth root.
            int rv = pair.rowR[(y + n - x) % n];
            int sv = pair.rowS[(x + y) % n];
            int e = rv == 1 ? (sv == 1 ? 1 : 0) : (sv == 1 ? 2 : 3);
            B.set(x, y, e);
        }
    // B B^* = (n-1) I + J.
    for (size_t i = 0; i < n; ++i) {
        require(row_inner(B, i, i) == CycInt(4, Int(static_cast<long>(n))),
                "barba_from_circulant_ew: bad diagonal Gram entry");
        for (size_t j = i + 1; j < n; ++j)
            require(row_inner(B, i, j) == CycInt(4, 1),
                    "barba_from_circulant_ew: bad off-diagonal Gram entry");
    }
    return B;
}

RootMatrix ew_from_barba(const RootMatrix& B) {
    require(B.m <= 2 && !B.weighing, "ew_from_barba: input must be real");
    size_t n = B.n;
    for (size_t i = 0; i < n; ++i) {
        require(row_inner(B, i, i) == CycInt(B.m, Int(static_cast<long>(n))),
                "ew_from_barba: input is not a Barba matrix");
        for (size_t j = i + 1; j < n; ++j)
            require(row_inner(B, i, j) == CycInt(B.m, 1),
                    "ew_from_barba: input is not a Barba matrix");
    }
    RootMatrix W(2, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int e = (B.m == 2) ? B.at(i, j) : 0;
            W.at(i, j) = e;
            W.at(i, n + j) = e;
            W.at(n + i, j) = 1 - e;
            W.at(n + i, n + j) = e;
        }
    // Ehlich--Wojtas Gram: diagonal blocks (2n-2) I + 2 J, off-diagonal 0.
    for (size_t i = 0; i < 2 * n; ++i)
        for (size_t j = i; j < 2 * n; ++j) {
            CycInt inner = row_inner(W, i, j);
            bool same_half = (i < n) == (j < n);
            CycInt want =
                !same_half ? CycInt(2)
                           : CycInt(2, Int(i == j ? static_cast<long>(2 * n) : 2));
            require(inner == want, "ew_from_barba: output Gram is not of EW type");
        }
    return W;
}

RootMatrix wedge_weighing(const RootMatrix& H, unsigned k) {
    require(H.m <= 2 && !H.weighing, "wedge_weighing: input must be real");
    require(k == 2 || k == 3, "wedge_weighing: k must be 2 or 3");
    size_t n = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n)), "wedge_weighing");
    RootMatrix H2 = H;
    H2.m = 2;  // normalise all-ones inputs so minors live over Z
    CMat minors = wedge_minors(H2.to_cyc(), k);
    Int div = k == 2 ? 2 : 4;
    RootMatrix W(2, minors.rows(), /*weighing=*/true);
    for (size_t i = 0; i < W.n; ++i)
        for (size_t j = 0; j < W.n; ++j)
            W.at(i, j) = root_exponent(minors(i, j).divide_exact(div), 2);
    Int w = ipow(Int(static_cast<long>(n)), k) / ipow(div, 2);
    require(is_weighing(W, w), "wedge_weighing: output Gram is not w I");
    return W;
}

RootMatrix gw_from_bh3(const RootMatrix& H) {
    require(H.m == 3 && !H.weighing, "gw_from_bh3: input must be a BH(n,3)");
    size_t n = H.n;
    verify_scaled_identity(H, Int(static_cast<long>(n)), "gw_from_bh3");
    // Promote to sixth roots and divide the 2x2 minors by
    // sqrt(-3) = zeta_6^2 - zeta_6^4.
    RootMatrix H6(6, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) H6.set(i, j, 2L * H.at(i, j));
    CMat minors = wedge_minors(H6.to_cyc(), 2);
    CycInt sqrt_m3 = CycInt::root(6, 2) - CycInt::root(6, 4);
    RootMatrix W(6, minors.rows(), /*weighing=*/true);
    for (size_t i = 0; i < W.n; ++i)
        for (size_t j = 0; j < W.n; ++j)
            W.at(i, j) = root_exponent(minors(i, j).divide_exact(sqrt_m3), 6);
    Int w = Int(static_cast<long>(n * n)) / 3;
    require(is_weighing(W, w), "gw_from_bh3: output Gram is not w I");
    return W;
}

std::vector<std::vector<std::vector<unsigned>>> mols_from_gh(unsigned q) {
    SmallField F(q);
    std::vector<std::vector<std::vector<unsigned>>> mols;
    for (unsigned k = 1; k < q; ++k) {
        std::vector<std::vector<unsigned>> L(q, std::vector<unsigned>(q));
        for (unsigned i = 0; i < q; ++i)
            for (unsigned j = 0; j < q; ++j) L[i][j] = F.add(F.mul(k, i), j) + 1;
        mols.push_back(std::move(L));
    }
    // Latin property.
    for (const auto& L : mols)
        for (unsigned i = 0; i < q; ++i) {
            std::vector<unsigned> row(q, 0), col(q, 0);
            for (unsigned j = 0; j < q; ++j) {
                row[L[i][j] - 1]++;
                col[L[j][i] - 1]++;
            }
            for (unsigned v = 0; v < q; ++v)
                require(row[v] == 1 && col[v] == 1, "mols_from_gh: not Latin");
        }
    // Pairwise orthogonality.
    for (size_t a = 0; a < mols.size(); ++a)
        for (size_t b = a + 1; b < mols.size(); ++b) {
            std::vector<unsigned> seen(q * q, 0);
            for (unsigned i = 0; i < q; ++i)
                for (unsigned j = 0; j < q; ++j)
                    seen[(mols[a][i][j] - 1) * q + (mols[b][i][j] - 1)]++;
            for (unsigned v = 0; v < q * q; ++v)
                require(seen[v] == 1, "mols_from_gh: squares are not orthogonal");
        }
    return mols;
}

}  // namespace maxdet
