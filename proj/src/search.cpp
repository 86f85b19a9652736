#include "maxdet/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "maxdet/analysis.hpp"
#include "maxdet/numtheory.hpp"

namespace maxdet {

namespace {

// adj(A)_{ij} = (-1)^{i+j} det(A with row j and column i deleted), so that
// A adj(A) = det(A) I. Used for the bordered determinant identity
//   det([[D, v], [v*, t]]) = t det(D) - v* adj(D) v.
CMat adjugate(const CMat& A) {
    size_t n = A.rows();
    CMat out(n, n);
    if (n == 1) {
        out(0, 0) = CycInt(A(0, 0).order(), Int(1));
        return out;
    }
    CMat minor(n - 1, n - 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t a = 0, ai = 0; a < n; ++a) {
                if (a == j) continue;
                for (size_t b = 0, bj = 0; b < n; ++b) {
                    if (b == i) continue;
                    minor(ai, bj) = A(a, b);
                    ++bj;
                }
                ++ai;
            }
            CycInt d = det_exact(minor);
            out(i, j) = (i + j) % 2 == 0 ? d : -d;
        }
    return out;
}

// Enumerate all v in phi^len, reporting the Hermitian form value
// s = v* A v (a rational integer for our root orders) for each. The
// recursion maintains s and the partial row vector r_j = sum_{i<k}
// conj(v_i) A_{ij}, so each step costs O(len - k) ring operations.
void enumerate_forms(const CMat& A, const CandidateSet& cs, size_t len,
                     const std::function<void(const Int& s, const std::vector<size_t>&)>& emit) {
    std::vector<size_t> idx(len, 0);
    std::vector<std::vector<CycInt>> rstack(len + 1, std::vector<CycInt>(len, CycInt(cs.m)));
    std::vector<Int> sstack(len + 1, Int(0));

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == len) {
            emit(sstack[len], idx);
            return;
        }
        for (size_t t = 0; t < cs.phi.size(); ++t) {
            idx[k] = t;
            const CycInt& x = cs.phi[t];
            // s' = s + |x|^2 A_kk + (r_k x + conj(r_k x))
            CycInt cross = rstack[k][k] * x;
            CycInt diag = A(k, k) * cs.phi_abs2[t];
            CycInt s_new = diag + cross + cross.conj();
            sstack[k + 1] = sstack[k] + s_new.to_int();
            CycInt xc = x.conj();
            for (size_t j = k + 1; j < len; ++j) rstack[k + 1][j] = rstack[k][j] + xc * A(k, j);
            rec(k + 1);
        }
    };
    rec(0);
}

bool norm_obstructed(const Int& det_sq, unsigned m) {
    if (m == 2) {
        // the determinant is a rational integer, so |det|^2 is a square
        return squarefree_split(det_sq).second != 1;
    }
    if (m == 3 || m == 6) {
        Int sf = squarefree_split(det_sq).second;
        for (const auto& [p, e] : factorize(sf).factors)
            if (p % 3 == 2) return true;
        return false;
    }
    if (m == 4) {
        Int v = det_sq;
        while (v % 2 == 0) v /= 2;
        Int sf = squarefree_split(v).second;
        for (const auto& [p, e] : factorize(sf).factors)
            if (p % 4 == 3) return true;
        return false;
    }
    return false;
}

GramMatrix as_gram(const CMat& g, unsigned m) {
    GramMatrix G;
    G.m = m;
    G.n = g.rows();
    G.g = g;
    return G;
}

}  // namespace

CandidateSet CandidateSet::make(unsigned n, unsigned m) {
    CandidateSet cs;
    cs.m = m;
    cs.n = n;
    cs.c = sigma(m, n);
    if (cs.c == 0)
        throw std::invalid_argument(
            "CandidateSet: n roots of unity can cancel at this order (sigma = 0); "
            "the pruning bound requires a positive modulus floor");
    // All sums of n m-th roots: compositions of n into m nonnegative parts.
    std::set<std::vector<Int>> seen;
    std::vector<std::pair<Int, CycInt>> vals;
    std::vector<Int> counts(m, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned left) {
        if (k + 1 == m) {
            counts[k] = left;
            CycInt v = CycInt::from_coeffs(m, counts);
            if (seen.insert(v.coeffs()).second) vals.emplace_back(v.abs2(), v);
            return;
        }
        for (unsigned t = 0; t <= left; ++t) {
            counts[k] = t;
            rec(k + 1, left - t);
        }
    };
    rec(0, n);
    std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second.coeffs() < b.second.coeffs();
    });
    for (auto& [a2, v] : vals) {
        cs.phi.push_back(v);
        cs.phi_abs2.push_back(a2);
    }
    return cs;
}

PruneBound mk_bound(const GramMatrix& D, const CandidateSet& cs, unsigned ell, unsigned r_max) {
    size_t r = D.n;
    if (ell <= r) throw std::invalid_argument("mk_bound: need ell > r");
    if (!D.is_positive_definite()) throw std::invalid_argument("mk_bound: D not positive-definite");
    Int detD = det_exact(D.g).to_int();
    CMat A = adjugate(D.g);
    const Int n(cs.n), c(cs.c);

    PruneBound out;
    double work = 1;
    for (size_t i = 0; i < r; ++i) work *= static_cast<double>(cs.phi.size());
    if (r <= r_max && work <= 2.0e4) {
        // Exhaustive d_hat = max over gamma of c det(D) - gamma* adj(D) gamma.
        Int best_s;
        bool have = false;
        enumerate_forms(A, cs, r, [&](const Int& s, const std::vector<size_t>&) {
            if (!have || s < best_s) {
                best_s = s;
                have = true;
            }
        });
        out.d_hat = c * detD - best_s;
    } else {
        // gamma* adj(D) gamma >= 0 for positive-definite D, so c det(D) is a
        // valid over-estimate of d_hat; a larger d_hat only weakens the
        // bound, never invalidates it.
        out.d_hat = c * detD;
    }
    Int dh = out.d_hat > 0 ? out.d_hat : Int(0);
    out.bound = ipow(n - c, ell - r - 1) * ((n - c) * detD + Int(ell - r) * dh);
    return out;
}

std::string canonical_gram_key(const CMat& g, unsigned m) {
    size_t n = g.rows();
    if (n > 8) throw std::invalid_argument("canonical_gram_key: order too large for brute force");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;

    auto encode = [&](const CMat& h) {
        std::ostringstream os;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                for (const Int& c : h(i, j).coeffs()) os << c.get_str() << ',';
                os << ';';
            }
        return os.str();
    };

    std::string best;
    do {
        CMat h(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) h(i, j) = g(perm[i], perm[j]);
        // Canonical diagonal conjugation: pick each d_j (unit root) to
        // minimise the encoding of entry (0, j); the m rotations of a
        // nonzero cyclotomic integer are distinct, so the choice is unique.
        // Zero first-row entries leave d_j free; fall back to trying all.
        std::vector<bool> free_col(n, false);
        for (size_t j = 1; j < n; ++j) {
            if (h(0, j).is_zero()) {
                free_col[j] = true;
                continue;
            }
            CycInt best_e = h(0, j);
            unsigned best_k = 0;
            for (unsigned k = 1; k < m; ++k) {
                CycInt e = h(0, j) * CycInt::root(m, k);
                if (e.coeffs() < best_e.coeffs()) {
                    best_e = e;
                    best_k = k;
                }
            }
            if (best_k != 0)
                for (size_t i = 0; i < n; ++i) {
                    h(i, j) = h(i, j) * CycInt::root(m, best_k);
                    h(j, i) = h(j, i) * CycInt::root(m, m - best_k);
                }
        }
        std::vector<size_t> free_idx;
        for (size_t j = 1; j < n; ++j)
            if (free_col[j]) free_idx.push_back(j);
        std::vector<unsigned> choice(free_idx.size(), 0);
        while (true) {
            CMat h2 = h;
            for (size_t t = 0; t < free_idx.size(); ++t) {
                size_t j = free_idx[t];
                if (choice[t] == 0) continue;
                for (size_t i = 0; i < n; ++i) {
                    h2(i, j) = h2(i, j) * CycInt::root(m, choice[t]);
                    h2(j, i) = h2(j, i) * CycInt::root(m, m - choice[t]);
                }
            }
            std::string e = encode(h2);
            if (best.empty() || e < best) best = e;
            size_t t = 0;
            while (t < choice.size() && ++choice[t] == m) choice[t++] = 0;
            if (t == choice.size() && !choice.empty()) break;
            if (choice.empty()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<GramMatrix> gram_enumerate(unsigned n, unsigned m, const Int& det_lower_sq) {
    CandidateSet cs = CandidateSet::make(n, m);
    std::map<std::string, GramMatrix> results;
    const Int nn(n), c(cs.c);
    const Int d0 = det_lower_sq > 1 ? det_lower_sq : Int(1);

    // Minimal determinant a node of size k can have and still admit a
    // completion with det >= d0: its entry bound with the free over-estimate
    // d_hat <= c det(D) reads det(D) (n-c)^{n-k-1} [(n-c) + (n-k) c], which is
    // monotone in det(D). Children below the threshold cannot lead anywhere.
    auto det_threshold = [&](size_t k) -> Int {
        if (k >= n) return d0;
        Int denom = ipow(nn - c, n - k - 1) * ((nn - c) + Int(n - k) * c);
        Int t = (d0 + denom - 1) / denom;
        return t > 1 ? t : Int(1);
    };

    // Depth-first extension. At each node the current Gram D (size l) is
    // known positive-definite with det detD; children are all borders by
    // vectors over phi with corner n, kept when their determinant meets the
    // threshold for their size, deduped by canonical form. The full
    // candidate set is used at every level: restricting it based on the
    // deduped children is unsound, because a completion of the kept
    // representative may need unit rotations of values seen only in a
    // discarded equivalent child. Border coordinates are pre-filtered by
    // |v|^2 <= s_max (D^-1)_ii^-1 ... i.e. s = v* adj(D) v >= |v_i|^2
    // det(D)/n, so |v_i|^2 <= s_max n / det(D) with s_max = n det(D) - T.
    std::function<void(const CMat&, const Int&)> rec =
        [&](const CMat& g, const Int& detD) {
            size_t l = g.rows();
            if (l >= 2) {
                PruneBound pb = mk_bound(as_gram(g, m), cs, n);
                if (pb.bound < d0) return;
            }
            const Int T = det_threshold(l + 1);
            Int s_max = nn * detD - T;
            if (s_max < 0) return;
            Int cap = (s_max * nn) / detD;
            CandidateSet phi_f;
            phi_f.m = cs.m;
            phi_f.n = cs.n;
            phi_f.c = cs.c;
            for (size_t t = 0; t < cs.phi.size(); ++t)
                if (cs.phi_abs2[t] <= cap) {
                    phi_f.phi.push_back(cs.phi[t]);
                    phi_f.phi_abs2.push_back(cs.phi_abs2[t]);
                }
            if (phi_f.phi.empty()) return;

            CMat A = adjugate(g);
            bool last = l + 1 == n;
            std::map<std::string, std::pair<CMat, Int>> children;
            enumerate_forms(A, phi_f, l, [&](const Int& s, const std::vector<size_t>& idx) {
                Int det_child = nn * detD - s;
                if (det_child < T) return;
                CMat child(l + 1, l + 1);
                for (size_t i = 0; i < l; ++i) {
                    for (size_t j = 0; j < l; ++j) child(i, j) = g(i, j);
                    child(i, l) = phi_f.phi[idx[i]];
                    child(l, i) = phi_f.phi[idx[i]].conj();
                }
                child(l, l) = CycInt(m, nn);
                std::string key = canonical_gram_key(child, m);
                children.emplace(key, std::make_pair(child, det_child));
            });
            if (last) {
                for (auto& [key, cd] : children) results.emplace(key, as_gram(cd.first, m));
                return;
            }
            for (auto& [key, cd] : children) rec(cd.first, cd.second);
        };

    CMat root(1, 1);
    root(0, 0) = CycInt(m, nn);
    rec(root, nn);

    std::vector<GramMatrix> out;
    for (auto& [k, gmat] : results) out.push_back(gmat);
    return out;
}

std::string elim_reason_str(ElimReason r) {
    switch (r) {
        case ElimReason::NORM_OBSTRUCTION: return "NORM_OBSTRUCTION";
        case ElimReason::DIVISIBILITY: return "DIVISIBILITY";
        case ElimReason::CHARPOLY: return "CHARPOLY";
        default: return "REALIZED_SMALLER";
    }
}

Certificate certify_max(unsigned n, unsigned m, const RootMatrix& target) {
    if (target.n != n || target.m != m)
        throw std::invalid_argument("certify_max: target shape mismatch");
    Certificate cert;
    cert.n = n;
    cert.m = m;
    cert.target_det_sq = det_abs2(target);
    if (cert.target_det_sq <= 0) throw std::invalid_argument("certify_max: target is singular");

    Int base = m == 3 ? 3 : 2;
    for (GramMatrix& G : gram_enumerate(n, m, cert.target_det_sq + 1)) {
        Int d = det_exact(G.g).to_int();
        if (norm_obstructed(d, m)) {
            cert.eliminations.push_back({G, d, ElimReason::NORM_OBSTRUCTION});
            continue;
        }
        if (!mpz_divisible_p(d.get_mpz_t(), ipow(base, n - 1).get_mpz_t())) {
            cert.eliminations.push_back({G, d, ElimReason::DIVISIBILITY});
            continue;
        }
        std::vector<Int> cp = charpoly_int(G);
        bool cp_ok = true;
        for (size_t i = 1; i < cp.size(); ++i)
            if (!mpz_divisible_p(cp[i].get_mpz_t(), ipow(base, i - 1).get_mpz_t())) cp_ok = false;
        if (!cp_ok) {
            cert.eliminations.push_back({G, d, ElimReason::CHARPOLY});
            continue;
        }
        cert.survivors.push_back(G);
    }
    return cert;
}

MaxdetResult exhaustive_maxdet(unsigned n, unsigned m) {
    // Every matrix is monomially equivalent to one whose first row and first
    // column are all ones; |det| is invariant, and row order is irrelevant,
    // so the remaining n-1 rows form a multiset over the m^{n-1} dephased
    // rows.
    if (n < 1) throw std::invalid_argument("exhaustive_maxdet: n >= 1");
    size_t nrows = 1;
    for (unsigned i = 0; i + 1 < n; ++i) {
        nrows *= m;
        if (nrows > 200000) throw std::invalid_argument("exhaustive_maxdet: budget exceeded");
    }
    double combos = 1;
    for (unsigned i = 1; i < n; ++i) combos *= static_cast<double>(nrows + i) / i;
    if (combos > 6.0e6) throw std::invalid_argument("exhaustive_maxdet: budget exceeded");

    MaxdetResult best;
    best.det_sq = n == 1 ? 1 : -1;
    best.witness = RootMatrix(m, n);
    if (n == 1) return best;

    std::vector<std::vector<int>> rows(nrows, std::vector<int>(n, 0));
    for (size_t r = 0; r < nrows; ++r) {
        size_t v = r;
        for (unsigned j = 1; j < n; ++j) {
            rows[r][j] = static_cast<int>(v % m);
            v /= m;
        }
    }
    std::vector<size_t> pick(n - 1, 0);
    CMat M(n, n);
    for (size_t j = 0; j < n; ++j) M(0, j) = CycInt(m, Int(1));
    std::function<void(size_t, size_t)> rec = [&](size_t k, size_t lo) {
        if (k == n - 1) {
            for (size_t i = 0; i < n - 1; ++i)
                for (size_t j = 0; j < n; ++j) M(i + 1, j) = CycInt::root(m, rows[pick[i]][j]);
            Int d = det_exact(M).abs2();
            if (d > best.det_sq) {
                best.det_sq = d;
                for (size_t i = 0; i < n - 1; ++i)
                    for (size_t j = 0; j < n; ++j) best.witness.at(i + 1, j) = rows[pick[i]][j];
            }
            return;
        }
        for (size_t r = lo; r < nrows; ++r) {
            pick[k] = r;
            rec(k + 1, r);
        }
    };
    rec(0, 0);
    return best;
}

Graph orth_graph(const std::vector<std::vector<int>>& rows) {
    Graph g;
    g.n = rows.size();
    g.adj.assign(g.n, std::vector<bool>(g.n, false));
    for (size_t i = 0; i < g.n; ++i)
        for (size_t j = i + 1; j < g.n; ++j) {
            if (rows[i].size() != rows[j].size())
                throw std::invalid_argument("orth_graph: unequal row lengths");
            long dot = 0;
            for (size_t t = 0; t < rows[i].size(); ++t) dot += rows[i][t] * rows[j][t];
            g.adj[i][j] = g.adj[j][i] = dot == 0;
        }
    return g;
}

std::optional<std::vector<size_t>> max_clique(const Graph& g, size_t k) {
    if (k == 0) return std::vector<size_t>{};
    // Vertices in descending degree order for better early pruning.
    std::vector<size_t> order(g.n);
    for (size_t i = 0; i < g.n; ++i) order[i] = i;
    std::vector<size_t> deg(g.n, 0);
    for (size_t i = 0; i < g.n; ++i)
        for (size_t j = 0; j < g.n; ++j)
            if (g.adj[i][j]) ++deg[i];
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return deg[a] > deg[b]; });

    std::vector<size_t> clique;
    std::function<bool(const std::vector<size_t>&)> rec = [&](const std::vector<size_t>& cands) {
        if (clique.size() == k) return true;
        if (clique.size() + cands.size() < k) return false;
        for (size_t t = 0; t < cands.size(); ++t) {
            if (clique.size() + (cands.size() - t) < k) return false;
            size_t v = cands[t];
            std::vector<size_t> next;
            for (size_t u = t + 1; u < cands.size(); ++u)
                if (g.adj[v][cands[u]]) next.push_back(cands[u]);
            clique.push_back(v);
            if (rec(next)) return true;
            clique.pop_back();
        }
        return false;
    };
    if (rec(order)) return clique;
    return std::nullopt;
}

std::optional<PaleySubmatrix> paley_submatrix(unsigned p, unsigned h, unsigned row_sample,
                                              unsigned long long seed, unsigned max_attempts) {
    if (h > p || h == 0) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::vector<unsigned> all(p);
    for (unsigned i = 0; i < p; ++i) all[i] = i;

    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<unsigned> cols(all.begin(), all.begin() + h);
        std::vector<unsigned> pool(all.begin() + h, all.end());
        if (pool.size() > row_sample) pool.resize(row_sample);

        std::vector<std::vector<int>> rows(pool.size(), std::vector<int>(h));
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = 0; j < h; ++j)
                rows[i][j] = legendre(Int(pool[i]) - Int(cols[j]), Int(p));
        Graph g = orth_graph(rows);
        auto cl = max_clique(g, h);
        if (!cl) continue;

        PaleySubmatrix out;
        out.cols = cols;
        for (size_t v : *cl) out.rows.push_back(pool[v]);
        // Self-verification: the restricted submatrix must be Hadamard.
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < h; ++j) {
                long dot = 0;
                for (size_t t = 0; t < h; ++t)
                    dot += legendre(Int(out.rows[i]) - Int(cols[t]), Int(p)) *
                           legendre(Int(out.rows[j]) - Int(cols[t]), Int(p));
                if (dot != (i == j ? static_cast<long>(h) : 0))
                    throw std::logic_error("paley_submatrix: verification failed");
            }
        return out;
    }
    return std::nullopt;
}

std::optional<unsigned> residue_pattern(unsigned p, const std::vector<unsigned>& plus,
                                        const std::vector<unsigned>& minus) {
    if (p < 3) return std::nullopt;  // no odd-prime quadratic character
    for (unsigned r = 0; r < p; ++r) {
        bool ok = true;
        for (unsigned a : plus) {
            Int v = (Int(r) + a) % p;
            if (v == 0 || legendre(v, Int(p)) != 1) {
                ok = false;
                break;
            }
        }
        for (unsigned a : minus) {
            if (!ok) break;
            Int v = (Int(r) + a) % p;
            if (v == 0 || legendre(v, Int(p)) != -1) ok = false;
        }
        if (ok) return r;
    }
    return std::nullopt;
}

}  // namespace maxdet
