#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "maxdet/analysis.hpp"
#include "maxdet/search.hpp"

using namespace maxdet;

namespace {

RootMatrix load_corpus(const std::string& name) {
    return load_rum(std::string(MAXDET_CORPUS_DIR) + "/" + name);
}

GramMatrix diag_gram(unsigned m, const std::vector<std::vector<Int>>& vals) {
    GramMatrix G;
    G.m = m;
    G.n = vals.size();
    G.g = CMat(G.n, G.n);
    for (size_t i = 0; i < G.n; ++i)
        for (size_t j = 0; j < G.n; ++j) G.g(i, j) = CycInt(m, vals[i][j]);
    return G;
}

std::multiset<Int> det_multiset(const std::vector<GramMatrix>& gs) {
    std::multiset<Int> out;
    for (const auto& g : gs) out.insert(det_exact(g.g).to_int());
    return out;
}

}  // namespace

TEST_CASE("candidate set: all inner-product values of n rows over m-th roots") {
    CandidateSet cs = CandidateSet::make(5, 3);
    CHECK(cs.c == 1);
    CHECK(cs.phi.size() == 21);  // compositions of 5 into 3 parts, all distinct values
    CHECK(cs.phi_abs2.front() == 25);
    CHECK(cs.phi_abs2.back() == 1);
    CHECK(std::is_sorted(cs.phi_abs2.begin(), cs.phi_abs2.end(), std::greater<Int>()));
    // |v|^2 spectrum: 25 x3, 13 x6, 7 x6, 4 x3, 1 x3
    std::map<Int, int> spectrum;
    for (const Int& a : cs.phi_abs2) spectrum[a]++;
    CHECK(spectrum == std::map<Int, int>{{1, 3}, {4, 3}, {7, 6}, {13, 6}, {25, 3}});
    // every value must be reachable as an actual inner product of root rows
    for (const CycInt& v : cs.phi) CHECK(v.order() == 3);

    CandidateSet c17 = CandidateSet::make(17, 2);
    CHECK(c17.c == 1);
    CHECK(c17.phi.size() == 18);  // odd values -17..17

    // orders where n roots can cancel have no positive modulus floor
    CHECK_THROWS(CandidateSet::make(3, 3));
    CHECK_THROWS(CandidateSet::make(2, 2));
    CHECK_THROWS(CandidateSet::make(4, 4));
}

TEST_CASE("extension bound: worked 1x1 and 2x2 examples") {
    CandidateSet cs = CandidateSet::make(5, 3);
    GramMatrix D = diag_gram(3, {{5}});
    PruneBound pb = mk_bound(D, cs, 2);
    CHECK(pb.d_hat == 4);  // 5 - min |v|^2 with corner 1
    CHECK(pb.bound == 24);

    // ell = 5 from a single diagonal entry
    PruneBound pb5 = mk_bound(D, cs, 5);
    CHECK(pb5.bound == Int(64) * (20 + 4 * 4));

    // order 17 over {-1,+1}: D = [[17,1],[1,17]]
    CandidateSet c17 = CandidateSet::make(17, 2);
    GramMatrix D2 = diag_gram(2, {{17, 1}, {1, 17}});
    PruneBound pb17 = mk_bound(D2, c17, 17);
    CHECK(pb17.d_hat == 256);  // 288 - min gamma* adj(D) gamma = 288 - 32
    Int expected = 1;
    for (int i = 0; i < 14; ++i) expected *= 16;
    expected *= 16 * 288 + 15 * 256;
    CHECK(pb17.bound == expected);
    // sanity: the bound dominates the known maximum (327680 * 2^16)^2
    Int known = Int(327680) * 65536;
    CHECK(pb17.bound >= known * known);

    CHECK_THROWS(mk_bound(D, cs, 1));  // needs ell > r
}

TEST_CASE("gram_enumerate: order 2 and 3 ground truth") {
    // order 2 over third roots: only |v|^2 = 1 gives a pd Gram, det 3
    auto g23 = gram_enumerate(2, 3, Int(1));
    REQUIRE(g23.size() == 1);
    CHECK(det_exact(g23[0].g).to_int() == 3);
    CHECK(exhaustive_maxdet(2, 3).det_sq == 3);

    // order 3 over {-1,+1}, det >= 4: the 2I+J pattern (det 20, unrealizable)
    // and the realizable det-16 class
    auto g32 = gram_enumerate(3, 2, Int(4));
    CHECK(det_multiset(g32) == std::multiset<Int>{16, 20});
    CHECK(exhaustive_maxdet(3, 2).det_sq == 16);
}

TEST_CASE("gram_enumerate: pruning is lossless against a low-floor run") {
    // every class found with floor 1 and det >= d0 must reappear when
    // enumerating with floor d0 (the converse inclusion is automatic)
    auto full = gram_enumerate(4, 3, Int(1));
    CHECK(full.size() == 575);
    for (const Int& d0 : {Int(100), Int(150), Int(189)}) {
        auto pruned = gram_enumerate(4, 3, d0);
        std::multiset<Int> expect;
        for (const auto& g : full) {
            Int d = det_exact(g.g).to_int();
            if (d >= d0) expect.insert(d);
        }
        CHECK(det_multiset(pruned) == expect);
    }
}

TEST_CASE("canonical form: invariance under permutation and unit scaling") {
    std::mt19937 rng(20240821);
    for (int trial = 0; trial < 20; ++trial) {
        // random Gram of a random matrix over third roots
        RootMatrix M(3, 4);
        std::uniform_int_distribution<int> d(0, 2);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) M.at(i, j) = d(rng);
        GramMatrix G = gram(M);
        std::string key = canonical_gram_key(G.g, 3);
        // conjugate by a random permutation + diagonal of roots
        std::vector<size_t> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<unsigned> units(4);
        for (auto& u : units) u = static_cast<unsigned>(d(rng));
        CMat h(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                h(i, j) = G.g(perm[i], perm[j]) * CycInt::root(3, units[i]) *
                          CycInt::root(3, (3 - units[j]) % 3);
        CHECK(canonical_gram_key(h, 3) == key);
    }
    // different matrices get different keys
    CMat a(2, 2), b(2, 2);
    a(0, 0) = a(1, 1) = b(0, 0) = b(1, 1) = CycInt(2, Int(3));
    a(0, 1) = a(1, 0) = CycInt(2, Int(1));
    b(0, 1) = b(1, 0) = CycInt(2, Int(3));
    CHECK(canonical_gram_key(a, 2) != canonical_gram_key(b, 2));
}

TEST_CASE("exhaustive oracle: small orders over several root counts") {
    CHECK(exhaustive_maxdet(1, 3).det_sq == 1);
    CHECK(exhaustive_maxdet(2, 2).det_sq == 4);
    CHECK(exhaustive_maxdet(3, 3).det_sq == 27);  // Fourier matrix order 3
    CHECK(exhaustive_maxdet(3, 4).det_sq == 20);
    CHECK(exhaustive_maxdet(4, 3).det_sq == 189);
    // the witness is returned and consistent
    MaxdetResult r = exhaustive_maxdet(4, 3);
    CHECK(det_abs2(r.witness) == 189);
    CHECK_THROWS(exhaustive_maxdet(9, 6));  // budget guard
}

TEST_CASE("order-5 certificate over third roots") {
    // All candidate Gram classes above the realizable maximum 1701:
    // cross-checked against an independent Fischer-pruned census.
    auto cands = gram_enumerate(5, 3, Int(1702));
    CHECK(cands.size() == 38);
    std::multiset<Int> dets = det_multiset(cands);
    CHECK(dets.count(1728) == 3);
    CHECK(dets.count(1809) == 2);
    CHECK(dets.count(1971) == 1);
    CHECK(dets.size() == 38);

    Certificate cert = certify_max(5, 3, load_corpus("m5_3.rum"));
    CHECK(cert.target_det_sq == 1701);
    CHECK(cert.certified());
    CHECK(cert.survivors.empty());
    CHECK(cert.eliminations.size() == 38);
    std::map<ElimReason, int> by_reason;
    std::multiset<Int> div_dets;
    for (const auto& e : cert.eliminations) {
        by_reason[e.reason]++;
        if (e.reason == ElimReason::DIVISIBILITY) div_dets.insert(e.det_sq);
    }
    CHECK(by_reason[ElimReason::NORM_OBSTRUCTION] == 32);
    CHECK(by_reason[ElimReason::DIVISIBILITY] == 6);
    // the norm-passing determinants are exactly those reported alongside
    // the original certificate
    CHECK(div_dets == std::multiset<Int>{1728, 1728, 1728, 1809, 1809, 1971});
}

TEST_CASE("order-4 and order-3 certificates") {
    // order 4 over third roots: 189 is the abstract Gram maximum, so the
    // certificate is vacuous
    Certificate c4 = certify_max(4, 3, load_corpus("b4_3.rum"));
    CHECK(c4.target_det_sq == 189);
    CHECK(c4.certified());
    CHECK(c4.eliminations.empty());

    // order 3 over {-1,+1}: the det-20 class dies because a real determinant
    // is an integer, so |det|^2 must be a perfect square
    RootMatrix M(2, 3);
    M.at(1, 2) = 1;  // rows (1,1,1),(1,1,-1),(1,-1,1) dephased
    M.at(2, 1) = 1;
    CHECK(det_abs2(M) == 16);
    Certificate c3 = certify_max(3, 2, M);
    CHECK(c3.certified());
    REQUIRE(c3.eliminations.size() == 1);
    CHECK(c3.eliminations[0].det_sq == 20);
    CHECK(c3.eliminations[0].reason == ElimReason::NORM_OBSTRUCTION);
}

TEST_CASE("every elimination reason re-verifies independently") {
    Certificate cert = certify_max(5, 3, load_corpus("m5_3.rum"));
    for (const auto& e : cert.eliminations) {
        Int d = det_exact(e.g.g).to_int();
        CHECK(d == e.det_sq);
        CHECK(d > 1701);
        if (e.reason == ElimReason::NORM_OBSTRUCTION) {
            // squarefree part contains a prime = 2 (mod 3)
            auto [a, sf] = squarefree_split(d);
            bool found = false;
            for (const auto& [p, ex] : factorize(sf).factors)
                if (p % 3 == 2) found = true;
            CHECK(found);
        } else if (e.reason == ElimReason::DIVISIBILITY) {
            CHECK(d % 81 != 0);  // 3^(n-1) does not divide det
        }
    }
}

TEST_CASE("orthogonality graph and clique search") {
    // rows of the order-4 Hadamard matrix form a K4
    std::vector<std::vector<int>> had{
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    Graph g = orth_graph(had);
    auto k4 = max_clique(g, 4);
    REQUIRE(k4.has_value());
    CHECK(k4->size() == 4);

    // mutually non-orthogonal rows: edgeless graph
    std::vector<std::vector<int>> rows{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}};
    Graph g2 = orth_graph(rows);
    CHECK(!max_clique(g2, 2).has_value());
    CHECK(max_clique(g2, 1).has_value());

    // random rows: branch-and-bound agrees with the exhaustive subset oracle
    std::mt19937 rng(20240822);
    std::uniform_int_distribution<int> pm(0, 1);
    std::vector<std::vector<int>> rnd(18, std::vector<int>(12));
    for (auto& r : rnd)
        for (auto& v : r) v = pm(rng) ? 1 : -1;
    Graph g3 = orth_graph(rnd);
    size_t best = 0;
    for (unsigned mask = 1; mask < (1u << 18); ++mask) {
        std::vector<size_t> sel;
        for (size_t i = 0; i < 18; ++i)
            if (mask & (1u << i)) sel.push_back(i);
        if (sel.size() <= best) continue;
        bool clique = true;
        for (size_t i = 0; i < sel.size() && clique; ++i)
            for (size_t j = i + 1; j < sel.size(); ++j)
                if (!g3.adj[sel[i]][sel[j]]) {
                    clique = false;
                    break;
                }
        if (clique) best = sel.size();
    }
    CHECK(max_clique(g3, best).has_value());
    CHECK(!max_clique(g3, best + 1).has_value());
}

TEST_CASE("paley submatrix search") {
    auto sub = paley_submatrix(11, 4, 7, 20240826);
    REQUIRE(sub.has_value());  // result is self-verified inside the search
    CHECK(sub->rows.size() == 4);
    CHECK(sub->cols.size() == 4);
    // rows and columns are disjoint index sets
    for (unsigned r : sub->rows)
        for (unsigned c : sub->cols) CHECK(r != c);

    CHECK(!paley_submatrix(5, 7, 5, 1).has_value());  // h > p
}

TEST_CASE("residue pattern search") {
    std::vector<unsigned> plus{0, 6, 16}, minus{3, 8, 11};
    auto r7 = residue_pattern(7, plus, minus);
    REQUIRE(r7.has_value());
    CHECK(*r7 == 2);

    // solutions for p <= 100: {7,29,31,41,47,59,61} and every prime >= 71
    std::set<unsigned> want{7, 29, 31, 41, 47, 59, 61, 71, 73, 79, 83, 89, 97};
    for (unsigned p : {2u,  3u,  5u,  7u,  11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u,
                       43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u}) {
        CAPTURE(p);
        CHECK(residue_pattern(p, plus, minus).has_value() == (want.count(p) > 0));
    }

    // contradictory sign sets never match
    CHECK(!residue_pattern(13, {0}, {0}).has_value());
    // every returned r satisfies all conditions
    for (unsigned p : {29u, 71u, 101u}) {
        auto r = residue_pattern(p, plus, minus);
        REQUIRE(r.has_value());
        for (unsigned a : plus) CHECK(legendre(Int(*r + a) % p, Int(p)) == 1);
        for (unsigned a : minus) CHECK(legendre(Int(*r + a) % p, Int(p)) == -1);
    }
}
