#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "maxdet/feasibility.hpp"
#include "maxdet/numtheory.hpp"
#include "maxdet/qforms.hpp"

using namespace maxdet;

namespace {

struct ExpectedRow {
    long n, m, r, lambda1;
    const char* reason;
};

void check_table(const std::vector<GddRow>& got, const std::vector<ExpectedRow>& want,
                 long lambda2 = 1) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        CAPTURE(i);
        CHECK(got[i].params.n == want[i].n);
        CHECK(got[i].params.m == want[i].m);
        CHECK(got[i].params.r == want[i].r);
        CHECK(got[i].params.lambda1 == want[i].lambda1);
        CHECK(got[i].params.lambda2 == lambda2);
        CHECK(got[i].report.short_reason() == want[i].reason);
    }
}

// Independent re-check of an infeasibility certificate.
void recheck(const FeasibilityReport& rep) {
    switch (rep.reason) {
        case FeasibilityReport::Reason::NON_SQUARE:
            CHECK(!is_perfect_square(rep.value));
            break;
        case FeasibilityReport::Reason::SUM2SQ:
            CHECK(!sum_two_squares(rep.value).possible);
            break;
        case FeasibilityReport::Reason::SELF_CONJUGATE:
            CHECK(powmod(rep.prime, rep.t, rep.modulus) == rep.modulus - 1);
            break;
        default:
            break;
    }
}

}  // namespace

TEST_CASE("brc verdicts at the classical parameter triples") {
    // No projective plane of order 6.
    FeasibilityReport r43 = brc(43, 7, 1);
    CHECK(r43.infeasible());
    CHECK(r43.reason == FeasibilityReport::Reason::SYMBOL);
    CHECK(r43.prime == 3);
    // Order 10 passes BRC.
    CHECK(brc(111, 11, 1).verdict == Verdict::FEASIBLE_UNKNOWN);
    // Fano plane exists.
    CHECK(brc(7, 3, 1).verdict == Verdict::FEASIBLE_UNKNOWN);
    // Even v: order 4 biplane (16, 6, 2) has k - lambda = 4 square.
    CHECK(brc(16, 6, 2).verdict == Verdict::FEASIBLE_UNKNOWN);
    // (22, 7, 2): v even, k - lambda = 5 not a square.
    FeasibilityReport r22 = brc(22, 7, 2);
    CHECK(r22.infeasible());
    CHECK(r22.reason == FeasibilityReport::Reason::NON_SQUARE);
    CHECK(r22.value == 5);
    CHECK_THROWS_AS(brc(10, 4, 1), std::invalid_argument);
}

TEST_CASE("brc verdict is invariant under design complementation") {
    // (v, k, lambda) -> (v, v-k, v-2k+lambda) preserves k - lambda.
    for (long v = 5; v <= 120; ++v) {
        for (long k = 2; 2 * k <= v; ++k) {
            Int lam_num = Int(k) * (k - 1);
            if (lam_num % (v - 1) != 0) continue;
            long lam = to_long(lam_num / (v - 1));
            if (lam < 1) continue;
            long kc = v - k, lamc = v - 2 * k + lam;
            if (lamc < 0) continue;
            if (Int(lamc) * (v - 1) != Int(kc) * (kc - 1)) continue;
            CAPTURE(v);
            CAPTURE(k);
            CHECK(brc(v, k, lam).infeasible() == brc(v, kc, lamc).infeasible());
        }
    }
}

TEST_CASE("blocked projective plane orders up to 100") {
    std::vector<long> expect{6,  14, 21, 22, 30, 33, 38, 42, 46, 54,
                             57, 62, 66, 69, 70, 77, 78, 86, 93, 94};
    CHECK(plane_orders_blocked(100) == expect);
    CHECK(plane_orders_blocked(5).empty());
    CHECK(plane_orders_blocked(6) == std::vector<long>{6});
    // Cross-check against brc on the projective plane parameters
    // (n^2+n+1, n+1, 1) where the design identity holds.
    for (long n = 2; n <= 40; ++n) {
        bool listed = false;
        for (long b : plane_orders_blocked(100))
            if (b == n) listed = true;
        CAPTURE(n);
        CHECK(brc(n * n + n + 1, n + 1, 1).infeasible() == listed);
    }
}

TEST_CASE("bose_connor pinned examples") {
    FeasibilityReport a = bose_connor({2, 10, 5, 2, 1});
    CHECK(a.infeasible());
    CHECK(a.short_reason() == "mu=5");
    FeasibilityReport b = bose_connor({6, 18, 12, 6, 1});
    CHECK(b.infeasible());
    CHECK(b.short_reason() == "p=3");
    FeasibilityReport c = bose_connor({3, 5, 5, 4, 1});
    CHECK(c.infeasible());
    CHECK(c.short_reason() == "p=5");
    CHECK_THROWS_AS(bose_connor({2, 10, 5, 1, 1}), std::invalid_argument);
}

TEST_CASE("bose_connor symbol reasons recompute via the full invariant") {
    // eps_p(D) = (mu,nm)_p (mu,n)_p^m (nu,n)_p^m (mu,-1)_p^C(m,2)
    //            (nu,-1)_p^C(m(n-1),2) must be -1 at each reported prime.
    auto full_invariant = [](const GddParams& g, const Int& p) {
        Place v = Place::prime(p);
        Rat mu(g.mu()), nu(g.nu());
        int e = hilbert_local(mu, Rat(Int(g.n) * g.m), v);
        if (g.m % 2 == 1) e *= hilbert_local(mu, Rat(g.n), v) * hilbert_local(nu, Rat(g.n), v);
        auto odd_binom2 = [](Int k) { k %= 4; return k == 2 || k == 3; };
        if (odd_binom2(Int(g.m))) e *= hilbert_local(mu, Rat(-1), v);
        if (odd_binom2(Int(g.m) * (g.n - 1))) e *= hilbert_local(nu, Rat(-1), v);
        return e;
    };
    std::vector<GddParams> cases{{6, 18, 12, 6, 1},  {3, 5, 5, 4, 1},  {9, 3, 7, 3, 1},
                                 {10, 3, 8, 4, 1},   {2, 27, 8, 4, 1}, {6, 78, 22, 0, 1},
                                 {9, 43, 23, 16, 1}, {4, 151, 25, 0, 1}};
    for (const GddParams& g : cases) {
        FeasibilityReport rep = bose_connor(g);
        REQUIRE(rep.infeasible());
        if (rep.reason == FeasibilityReport::Reason::SYMBOL) {
            CAPTURE(g.n);
            CAPTURE(g.m);
            CHECK(full_invariant(g, rep.prime) == -1);
        } else {
            recheck(rep);
        }
    }
}

TEST_CASE("gdd table: lambda2=1, m = 2 (mod 4), n even, n <= 10, m <= 50") {
    GddScanSpec spec;
    spec.n_min = 2, spec.n_max = 10, spec.n_mod = 2, spec.n_res = 0;
    spec.m_min = 2, spec.m_max = 50, spec.m_mod = 4, spec.m_res = 2;
    std::vector<ExpectedRow> want{
        {2, 10, 5, 2, "mu=5"},    {2, 14, 6, 4, "mu=8"},    {2, 22, 7, 0, "mu=5"},
        {2, 26, 8, 6, "mu=12"},   {2, 34, 9, 6, "mu=13"},   {2, 46, 10, 0, "mu=8"},
        {4, 22, 10, 2, "mu=12"},  {4, 34, 12, 0, "mu=8"},   {4, 34, 13, 8, "mu=33"},
        {4, 42, 14, 6, "mu=28"},  {4, 46, 15, 10, "mu=41"}, {6, 18, 12, 6, "p=3"},
        {6, 22, 13, 6, "mu=37"},  {6, 26, 15, 12, "mu=69"}, {6, 38, 17, 10, "mu=61"},
        {6, 42, 18, 12, "mu=72"}, {8, 6, 11, 10, "mu=73"},  {8, 10, 13, 12, "mu=89"},
        {8, 14, 12, 4, "mu=32"},  {8, 22, 14, 2, "mu=20"},  {8, 34, 18, 6, "mu=52"},
        {8, 38, 20, 12, "mu=96"}, {8, 50, 21, 4, "mu=41"},  {8, 50, 22, 10, "mu=84"},
        {10, 22, 15, 0, "mu=5"},  {10, 34, 21, 10, "mu=101"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd table: resolvable, lambda2=1, m = 2 (mod 4), n even, n,m <= 100") {
    GddScanSpec spec;
    spec.n_min = 2, spec.n_max = 100, spec.n_mod = 2, spec.n_res = 0;
    spec.m_min = 2, spec.m_max = 100, spec.m_mod = 4, spec.m_res = 2;
    spec.resolvable = true;
    std::vector<ExpectedRow> want{
        {2, 22, 7, 0, "mu=5"},   {2, 46, 10, 0, "mu=8"},   {4, 34, 12, 0, "mu=8"},
        {6, 58, 19, 0, "mu=13"}, {6, 78, 22, 0, "p=11"},   {8, 70, 24, 0, "p=3"},
        {10, 22, 15, 0, "mu=5"}, {10, 94, 31, 0, "mu=21"}, {14, 34, 22, 0, "mu=8"},
        {14, 86, 35, 0, "mu=21"}, {20, 22, 21, 0, "p=3"},  {26, 58, 39, 0, "mu=13"},
        {28, 46, 36, 0, "mu=8"}, {30, 70, 46, 0, "p=23"},  {30, 86, 51, 0, "mu=21"},
        {32, 34, 33, 0, "p=3"},  {40, 78, 56, 0, "p=7"},   {42, 94, 63, 0, "mu=21"},
        {56, 58, 57, 0, "p=3"},  {68, 70, 69, 0, "p=3"},   {76, 78, 77, 0, "p=7"},
        {92, 94, 93, 0, "p=3"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd table: lambda2=1, m odd, n even, n <= 10, m < 50") {
    GddScanSpec spec;
    spec.n_min = 2, spec.n_max = 10, spec.n_mod = 2, spec.n_res = 0;
    spec.m_min = 1, spec.m_max = 49, spec.m_mod = 2, spec.m_res = 1;
    std::vector<ExpectedRow> want{
        {2, 11, 5, 0, "nu=5"},    {2, 21, 7, 2, "nu=5"},    {2, 27, 8, 4, "p=5"},
        {2, 29, 8, 0, "nu=8"},    {2, 33, 9, 8, "p=3"},     {2, 35, 9, 4, "nu=5"},
        {2, 43, 10, 6, "p=7"},    {2, 45, 10, 2, "nu=8"},   {4, 7, 7, 6, "p=3"},
        {4, 15, 8, 0, "nu=8"},    {4, 19, 10, 6, "p=3"},    {4, 31, 12, 4, "nu=8"},
        {4, 45, 14, 2, "nu=12"},  {6, 11, 10, 6, "p=17"},   {6, 23, 12, 0, "nu=12"},
        {6, 27, 13, 0, "nu=13"},  {6, 31, 15, 6, "p=13"},   {6, 33, 17, 16, "p=13"},
        {6, 43, 17, 4, "nu=13"},  {6, 47, 18, 6, "nu=12"},  {8, 15, 15, 14, "p=5"},
        {8, 17, 13, 4, "p=11"},   {8, 35, 17, 0, "nu=17"},  {8, 43, 22, 18, "p=5"},
        {8, 45, 20, 4, "p=5"},    {10, 3, 8, 4, "p=17"},    {10, 13, 15, 10, "nu=5"},
        {10, 19, 18, 14, "p=67"}, {10, 31, 22, 18, "p=3"},  {10, 39, 20, 0, "nu=20"},
        {10, 43, 21, 0, "nu=21"}, {10, 43, 25, 20, "nu=5"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd table: resolvable, r square, m odd, n even, m <= 800") {
    GddScanSpec spec;
    spec.n_min = 2, spec.n_max = 800, spec.n_mod = 2, spec.n_res = 0;
    spec.m_min = 1, spec.m_max = 800, spec.m_mod = 2, spec.m_res = 1;
    spec.resolvable = true;
    spec.r_square = true;
    std::vector<ExpectedRow> want{
        {4, 151, 25, 0, "p=3"},    {6, 211, 36, 0, "p=3"},    {14, 91, 36, 0, "p=11"},
        {22, 451, 100, 0, "p=3"},  {24, 271, 81, 0, "p=3"},   {30, 43, 36, 0, "p=3"},
        {30, 331, 100, 0, "p=7"},  {44, 331, 121, 0, "p=11"}, {70, 547, 196, 0, "p=7"},
        {78, 491, 196, 0, "p=59"}, {88, 235, 144, 0, "p=7"},  {130, 295, 196, 0, "p=11"},
        {182, 211, 196, 0, "p=7"}, {228, 571, 361, 0, "p=7"}, {252, 771, 441, 0, "p=3"},
        {280, 571, 400, 0, "p=3"}, {308, 631, 441, 0, "p=7"}, {420, 463, 441, 0, "p=3"},
        {462, 507, 484, 0, "p=11"}, {480, 691, 576, 0, "p=3"}, {520, 751, 625, 0, "p=3"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd table: lambda2=1, n and m both odd, n < 10, m < 50") {
    GddScanSpec spec;
    spec.n_min = 3, spec.n_max = 9, spec.n_mod = 2, spec.n_res = 1;
    spec.m_min = 3, spec.m_max = 49, spec.m_mod = 2, spec.m_res = 1;
    std::vector<ExpectedRow> want{
        {3, 5, 5, 4, "p=5"},     {3, 11, 6, 0, "p=3"},    {3, 13, 7, 3, "p=5"},
        {3, 21, 9, 6, "p=3"},    {3, 23, 9, 3, "p=3"},    {3, 31, 10, 0, "p=5"},
        {3, 41, 12, 6, "p=7"},   {3, 43, 12, 3, "p=3"},   {3, 45, 13, 12, "p=17"},
        {5, 7, 6, 0, "p=3"},     {5, 13, 9, 3, "p=3"},    {5, 19, 10, 0, "p=5"},
        {5, 19, 11, 5, "p=13"},  {5, 21, 12, 8, "p=13"},  {5, 29, 13, 4, "p=3"},
        {5, 31, 14, 8, "p=3"},   {5, 35, 15, 10, "p=5"},  {5, 39, 15, 5, "p=5"},
        {5, 41, 16, 10, "p=17"}, {5, 43, 15, 0, "p=3"},   {7, 7, 10, 8, "p=3"},
        {7, 13, 13, 12, "p=13"}, {7, 31, 15, 0, "p=3"},   {7, 31, 16, 5, "p=13"},
        {7, 37, 18, 9, "p=13"},  {7, 37, 19, 15, "p=17"}, {7, 43, 19, 8, "p=3"},
        {7, 45, 20, 12, "p=5"},  {9, 3, 7, 3, "p=11"},    {9, 19, 15, 6, "p=3"},
        {9, 23, 19, 18, "p=11"}, {9, 39, 22, 15, "p=7"},  {9, 43, 23, 16, "p=71"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd table: resolvable, n and m both odd, n < 50, m < 100") {
    GddScanSpec spec;
    spec.n_min = 3, spec.n_max = 49, spec.n_mod = 2, spec.n_res = 1;
    spec.m_min = 3, spec.m_max = 99, spec.m_mod = 2, spec.m_res = 1;
    spec.resolvable = true;
    std::vector<ExpectedRow> want{
        {3, 11, 6, 0, "p=3"},    {3, 31, 10, 0, "p=5"},   {3, 53, 13, 0, "p=5"},
        {3, 71, 15, 0, "p=3"},   {5, 7, 6, 0, "p=3"},     {5, 19, 10, 0, "p=5"},
        {5, 43, 15, 0, "p=3"},   {5, 77, 20, 0, "p=3"},   {5, 85, 21, 0, "p=3"},
        {7, 31, 15, 0, "p=3"},   {7, 61, 21, 0, "p=3"},   {7, 67, 22, 0, "p=3"},
        {11, 43, 22, 0, "p=11"}, {13, 15, 14, 0, "p=7"},  {13, 51, 26, 0, "p=13"},
        {15, 29, 21, 0, "p=7"},  {15, 59, 30, 0, "p=3"},  {17, 71, 35, 0, "p=5"},
        {19, 75, 38, 0, "p=19"}, {19, 79, 39, 0, "p=13"}, {21, 23, 22, 0, "p=11"},
        {21, 83, 42, 0, "p=7"},  {29, 31, 30, 0, "p=3"},  {33, 61, 45, 0, "p=3"},
        {33, 91, 55, 0, "p=5"},  {35, 71, 50, 0, "p=5"},  {35, 89, 56, 0, "p=3"},
        {37, 39, 38, 0, "p=19"}, {41, 43, 42, 0, "p=3"},  {45, 47, 46, 0, "p=23"},
        {45, 67, 55, 0, "p=5"}};
    check_table(gdd_scan(spec), want);
}

TEST_CASE("gdd scan over an empty range yields no rows") {
    GddScanSpec spec;
    spec.n_min = 10, spec.n_max = 9, spec.m_min = 2, spec.m_max = 50;
    CHECK(gdd_scan(spec).empty());
}

TEST_CASE("tamura feasibility of the order-7m Ehlich Gram candidates") {
    CHECK(tamura(73).verdict == Verdict::FEASIBLE_UNKNOWN);
    // m = 3: 4m-3 = 9 is a square, the symbol condition fails.
    FeasibilityReport r3 = tamura(3);
    CHECK(r3.infeasible());
    CHECK(r3.reason == FeasibilityReport::Reason::SYMBOL);
    CHECK(r3.prime == 5);
    // m = 5: 17 is not a square.
    FeasibilityReport r5 = tamura(5);
    CHECK(r5.infeasible());
    CHECK(r5.reason == FeasibilityReport::Reason::NON_SQUARE);
    CHECK(r5.value == 17);
    CHECK_THROWS_AS(tamura(4), std::invalid_argument);

    std::vector<long> survivors;
    for (long m = 1; m < 2000; m += 2)
        if (tamura(m).verdict == Verdict::FEASIBLE_UNKNOWN && m > 1) survivors.push_back(m);
    CHECK(survivors == std::vector<long>{73, 241, 757, 1057, 1561});
}

TEST_CASE("butson obstructions for BH(n, 3) and BH(n, 5)") {
    FeasibilityReport r15 = butson_pf(15, 3, 1);
    CHECK(r15.infeasible());
    CHECK(r15.reason == FeasibilityReport::Reason::SELF_CONJUGATE);
    CHECK(r15.prime == 5);
    recheck(r15);
    CHECK(butson_pf(21, 3, 1).verdict == Verdict::FEASIBLE_UNKNOWN);
    CHECK(butson_pf(95, 5, 1).infeasible());
    // Divisibility: BH(n, p) needs p | n.
    FeasibilityReport r7 = butson_pf(7, 3, 1);
    CHECK(r7.infeasible());
    CHECK(r7.reason == FeasibilityReport::Reason::NORM);
    // ... but the lemma does not apply to BH(n, p^f) with f > 1.
    CHECK(butson_pf(7, 3, 2).verdict == Verdict::FEASIBLE_UNKNOWN);
    CHECK_THROWS_AS(butson_pf(15, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(butson_pf(14, 3, 1), std::invalid_argument);

    std::vector<long> bh3, bh5;
    for (long n = 3; n <= 120; n += 3)
        if (n % 2 == 1 && butson_pf(n, 3, 1).infeasible()) bh3.push_back(n);
    for (long n = 5; n <= 100; n += 5)
        if (n % 2 == 1 && butson_pf(n, 5, 1).infeasible()) bh5.push_back(n);
    CHECK(bh3 == std::vector<long>{15, 33, 45, 51, 69, 87, 99, 105});
    // n = 45 = 5 * 3^2 has trivial squarefree part away from 5, so the
    // self-conjugacy test cannot block it; all other published zeros match.
    CHECK(bh5 == std::vector<long>{15, 35, 65, 75, 85, 95});
}

TEST_CASE("self-conjugacy witnesses persist from p^f down to p") {
    std::mt19937_64 rng(0xFEA51B1E);
    std::uniform_int_distribution<long> qs(3, 2000);
    const long p = 7;
    for (int i = 0; i < 200; ++i) {
        long q = qs(rng);
        if (!is_prime(Int(q)) || q == p) continue;
        for (unsigned f = 2; f <= 3; ++f)
            if (is_self_conjugate(Int(q), Int(p), f)) CHECK(is_self_conjugate(Int(q), Int(p), 1));
    }
}

TEST_CASE("quaternary-unit Hadamard obstructions") {
    CHECK(quh(17, 7).infeasible());
    CHECK(quh(5, 23).infeasible());
    CHECK(quh(49, 7).verdict == Verdict::FEASIBLE_UNKNOWN);
    CHECK(quh(10, 7).verdict == Verdict::NOT_APPLICABLE);   // n even
    CHECK(quh(17, 9).verdict == Verdict::NOT_APPLICABLE);   // m square
    CHECK(quh(17, 15).verdict == Verdict::NOT_APPLICABLE);  // m+1 square

    auto first_blocked = [](long q, size_t count) {
        std::vector<long> out;
        for (long n = 1; out.size() < count; n += 2)
            if (quh(n, q).infeasible()) out.push_back(n);
        return out;
    };
    CHECK(first_blocked(7, 6) == std::vector<long>{17, 31, 41, 47, 51, 73});
    CHECK(first_blocked(11, 6) == std::vector<long>{13, 39, 61, 65, 73, 83});
    CHECK(first_blocked(19, 6) == std::vector<long>{29, 31, 41, 59, 71, 79});
    CHECK(first_blocked(23, 6) == std::vector<long>{5, 15, 19, 35, 43, 45});
    CHECK(first_blocked(31, 6) == std::vector<long>{17, 23, 51, 69, 73, 79});
    CHECK(first_blocked(43, 6) == std::vector<long>{5, 7, 15, 19, 21, 35});
}

TEST_CASE("barba obstructions over the third and fourth roots") {
    std::vector<long> blocked3;
    for (long n = 1; n < 150; ++n)
        if (n % 3 == 1 && barba3(n).infeasible()) blocked3.push_back(n);
    CHECK(blocked3 == std::vector<long>{16, 28, 34, 43, 46, 52, 58, 70, 73, 88, 94, 100, 103,
                                        106, 118, 124, 127, 133, 136, 142, 148});
    for (long n : blocked3) recheck(barba3(n));
    CHECK_THROWS_AS(barba3(5), std::invalid_argument);

    FeasibilityReport b11 = barba4(11);
    CHECK(b11.infeasible());
    CHECK(b11.reason == FeasibilityReport::Reason::SUM2SQ);
    CHECK(b11.value == 21);
    recheck(b11);
    CHECK(barba4(9).verdict == Verdict::FEASIBLE_UNKNOWN);
    CHECK_THROWS_AS(barba4(10), std::invalid_argument);
}
