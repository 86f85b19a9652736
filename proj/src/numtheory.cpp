#include "maxdet/numtheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace maxdet {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 50 rounds: deterministic for 64-bit inputs and overwhelming certainty
    // beyond (GMP runs BPSW first).
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant with deterministic restart offsets.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mod_floor(x * x + c, n);
            y = mod_floor(y * y + c, n);
            y = mod_floor(y * y + c, n);
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization F;
    F.value = n;
    Int rest = n;
    std::map<Int, unsigned> acc;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (rest % p == 0) {
            ++acc[Int(p)];
            rest /= p;
        }
    }
    factor_rec(rest, acc);
    for (auto& [p, e] : acc) F.factors.emplace_back(p, e);
    return F;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
    Factorization F = factorize(n);
    Int a = 1, m = 1;
    for (auto& [p, e] : F.factors) {
        if (e / 2) a *= ipow(p, e / 2);
        if (e % 2) m *= p;
    }
    return {a, m};
}

int legendre(const Int& a, const Int& p) {
    if (p <= 2 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
    int s = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    return s;
}

bool is_self_conjugate(const Int& q, const Int& p, unsigned f) {
    Int pf = ipow(p, f);
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (g != 1) throw std::invalid_argument("is_self_conjugate: gcd(q, p) != 1");
    // q^t = -1 (mod p^f) for some t iff -1 lies in <q>; walk the cycle of q.
    Int target = pf - 1;
    Int x = mod_floor(q, pf);
    if (x == target) return true;
    Int t = x;
    // The multiplicative order divides phi(p^f) < p^f; iterate the cycle.
    for (Int i = 1; i < pf; ++i) {
        t = mod_floor(t * x, pf);
        if (t == target) return true;
        if (t == 1) return false;  // completed the cycle
    }
    return false;
}

TwoSquares sum_two_squares(const Int& n) {
    if (n < 0) return {false, 0, 0};
    Factorization F = factorize(std::max(Int(1), n));
    bool ok = true;
    for (auto& [p, e] : F.factors)
        if (p % 4 == 3 && e % 2 == 1) ok = false;
    if (!ok || n < 0) return {false, 0, 0};
    for (Int x = 0; x * x * 2 <= n; ++x) {
        Int rem = n - x * x;
        if (is_perfect_square(rem)) return {true, x, isqrt(rem)};
    }
    // unreachable when the criterion holds
    throw std::logic_error("sum_two_squares: criterion passed but no witness found");
}

CubicDecomp solve_c27d(const Int& p) {
    if (!is_prime(p) || p % 3 != 1) throw std::invalid_argument("solve_c27d: p must be prime, p = 1 mod 3");
    Int fourp = 4 * p;
    for (Int d = 0; 27 * d * d <= fourp; ++d) {
        Int rem = fourp - 27 * d * d;
        if (!is_perfect_square(rem)) continue;
        Int c = isqrt(rem);
        for (Int cand : {Int(c), Int(-c)}) {
            if (mod_floor(cand, Int(3)) == 1 && cand * cand + 27 * d * d == fourp)
                return {p, cand, d};
        }
    }
    throw std::logic_error("solve_c27d: no representation found");
}

// ---- SmallField ------------------------------------------------------

namespace {

// Irreducible polynomials over F_p for the supported prime powers, as
// coefficient vectors of x^f = -(c_0 + c_1 x + ... + c_{f-1} x^{f-1}),
// stored low-to-high WITHOUT the leading coefficient.
const std::map<unsigned, std::pair<unsigned, std::vector<unsigned>>>& prime_power_polys() {
    static const std::map<unsigned, std::pair<unsigned, std::vector<unsigned>>> table = {
        // q -> (p, coefficients of monic irreducible, constant first)
        {4, {2, {1, 1}}},          // x^2 + x + 1
        {8, {2, {1, 1, 0}}},       // x^3 + x + 1
        {9, {3, {1, 0}}},          // x^2 + 1
        {16, {2, {1, 1, 0, 0}}},   // x^4 + x + 1
        {25, {5, {2, 1}}},         // x^2 + x + 2
        {27, {3, {1, 2, 0}}},      // x^3 + 2x + 1
        {32, {2, {1, 0, 1, 0, 0}}},// x^5 + x^2 + 1
        {49, {7, {3, 1}}},         // x^2 + x + 3
        {64, {2, {1, 1, 0, 0, 0, 0}}},  // x^6 + x + 1
        {81, {3, {2, 1, 0, 0}}},   // x^4 + x + 2
    };
    return table;
}

}  // namespace

SmallField::SmallField(unsigned q) : q_(q) {
    if (q < 2) throw std::invalid_argument("SmallField: q must be >= 2");
    std::vector<unsigned> poly;  // monic irreducible tail (constant first)
    if (is_prime(Int(q))) {
        p_ = q;
        f_ = 1;
    } else {
        auto it = prime_power_polys().find(q);
        if (it == prime_power_polys().end())
            throw std::invalid_argument("SmallField: unsupported prime power " + std::to_string(q));
        p_ = it->second.first;
        poly = it->second.second;
        f_ = static_cast<unsigned>(poly.size());
    }
    // Elements are base-p digit strings of length f (index = sum digit_i p^i).
    auto digits = [&](unsigned a) {
        std::vector<unsigned> d(f_);
        for (unsigned i = 0; i < f_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    };
    auto undigits = [&](const std::vector<unsigned>& d) {
        unsigned a = 0;
        for (unsigned i = f_; i-- > 0;) a = a * p_ + d[i];
        return a;
    };
    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        auto da = digits(a);
        std::vector<unsigned> nd(f_);
        for (unsigned i = 0; i < f_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = undigits(nd);
        for (unsigned b = 0; b < q_; ++b) {
            auto db = digits(b);
            std::vector<unsigned> ds(f_);
            for (unsigned i = 0; i < f_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = undigits(ds);
            // polynomial product reduced by the irreducible
            std::vector<unsigned> prod(2 * f_ - 1, 0);
            for (unsigned i = 0; i < f_; ++i)
                for (unsigned j = 0; j < f_; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (unsigned k = 2 * f_ - 1; k-- > f_;) {
                unsigned coef = prod[k];
                if (!coef) continue;
                prod[k] = 0;
                for (unsigned i = 0; i < f_; ++i)
                    prod[k - f_ + i] = (prod[k - f_ + i] + coef * (p_ - poly[i]) % p_ * 1u) % p_;
            }
            std::vector<unsigned> dm(prod.begin(), prod.begin() + f_);
            mul_[a * q_ + b] = undigits(dm);
        }
    }
    // Find a primitive element and build discrete logs.
    dlog_.assign(q_, 0);
    generator_ = 0;
    for (unsigned g = 1; g < q_; ++g) {
        std::vector<unsigned> log(q_, q_);
        unsigned x = 1, count = 0;
        for (unsigned e = 0; e < q_ - 1; ++e) {
            if (log[x] != q_) break;
            log[x] = e;
            ++count;
            x = mul(x, g);
        }
        if (count == q_ - 1 && x == 1) {
            generator_ = g;
            dlog_ = std::move(log);
            break;
        }
    }
    if (generator_ == 0) throw std::logic_error("SmallField: no primitive element found");
    // Spot-check field axioms: distributivity on a fixed triple sweep.
    for (unsigned a = 0; a < std::min(q_, 8u); ++a)
        for (unsigned b = 0; b < std::min(q_, 8u); ++b)
            for (unsigned c = 0; c < std::min(q_, 8u); ++c)
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("SmallField: distributivity failed");
}

unsigned SmallField::inv(unsigned a) const {
    if (a == 0) throw std::domain_error("SmallField::inv(0)");
    return pow(a, q_ - 2);
}

unsigned SmallField::pow(unsigned a, unsigned long e) const {
    unsigned r = 1;
    unsigned base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

unsigned SmallField::dlog(unsigned a) const {
    if (a == 0) throw std::domain_error("SmallField::dlog(0)");
    return dlog_[a];
}

bool SmallField::is_square(unsigned a) const {
    if (a == 0) return false;
    if (p_ == 2) return true;
    return dlog(a) % 2 == 0;
}

}  // namespace maxdet
