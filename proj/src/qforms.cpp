#include "maxdet/qforms.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace maxdet {

std::string Place::str() const {
    switch (kind) {
        case PRIME: return p.get_str();
        case TWO: return "2";
        default: return "inf";
    }
}

QuadForm QuadForm::from(const QMat& m) {
    QuadForm q;
    q.n = m.rows();
    q.a = m;
    if (!q.is_symmetric()) throw std::invalid_argument("QuadForm: matrix not symmetric");
    return q;
}

QuadForm QuadForm::alpha_beta(const Rat& alpha, const Rat& beta, size_t d) {
    QMat m(d, d, beta);
    for (size_t i = 0; i < d; ++i) m(i, i) += alpha;
    return from(m);
}

QuadForm QuadForm::diagonal(const std::vector<Rat>& d) {
    QMat m(d.size(), d.size(), Rat(0));
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return from(m);
}

bool QuadForm::is_symmetric() const {
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

Rat QuadForm::det() const { return det_exact_rat(a); }

DiagonalForm polarize(const QuadForm& q) {
    size_t n = q.n;
    QMat A = q.a;
    QMat T(n, n, Rat(0));
    for (size_t i = 0; i < n; ++i) T(i, i) = 1;

    auto add_col = [&](QMat& M, size_t dst, size_t src, const Rat& c) {
        for (size_t i = 0; i < n; ++i) M(i, dst) += c * M(i, src);
    };
    auto add_row = [&](QMat& M, size_t dst, size_t src, const Rat& c) {
        for (size_t j = 0; j < n; ++j) M(dst, j) += c * M(src, j);
    };
    auto swap_sym = [&](size_t i, size_t j) {
        for (size_t k = 0; k < n; ++k) std::swap(A(i, k), A(j, k));
        for (size_t k = 0; k < n; ++k) std::swap(A(k, i), A(k, j));
        for (size_t k = 0; k < n; ++k) std::swap(T(k, i), T(k, j));
    };

    for (size_t k = 0; k < n; ++k) {
        if (A(k, k) == 0) {
            // symmetric swap with a later index of nonzero diagonal
            size_t pick = n;
            for (size_t i = k + 1; i < n; ++i)
                if (A(i, i) != 0) {
                    pick = i;
                    break;
                }
            if (pick < n) {
                swap_sym(k, pick);
            } else {
                // all remaining diagonal entries vanish; find b(x,y) != 0 and
                // substitute x -> x + y, which makes the diagonal nonzero
                size_t x = n, y = n;
                for (size_t i = k; i < n && x == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (A(i, j) != 0) {
                            x = i;
                            y = j;
                            break;
                        }
                if (x == n) throw std::invalid_argument("polarize: singular form");
                add_row(A, x, y, 1);
                add_col(A, x, y, 1);
                add_col(T, x, y, 1);
                if (x != k) swap_sym(k, x);
            }
        }
        Rat piv = A(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            if (A(i, k) == 0) continue;
            Rat c = -A(i, k) / piv;
            add_row(A, i, k, c);
            add_col(A, i, k, c);
            add_col(T, i, k, c);
        }
    }
    DiagonalForm D;
    D.transform = T;
    for (size_t i = 0; i < n; ++i) {
        if (A(i, i) == 0) throw std::invalid_argument("polarize: singular form");
        D.diag.push_back(A(i, i));
    }
    // exact verification of T^t Q T = diag
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rat s = 0;
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) s += T(r, i) * q.a(r, c) * T(c, j);
            if (s != (i == j ? D.diag[i] : Rat(0))) throw std::logic_error("polarize: identity check failed");
        }
    return D;
}

namespace {

// Strip square factors and denominators: v(r) odd part as p^e * u with e in
// {0,1} after reducing mod squares. Returns the squarefree integer in the
// square class of r.
Int square_class(const Rat& r) {
    Int num = r.get_num(), den = r.get_den();
    Int n = num * den;  // same square class as num/den
    int sgn = n < 0 ? -1 : 1;
    auto [a, m] = squarefree_split(abs(n));
    (void)a;
    return sgn * m;
}

}  // namespace

int hilbert_local(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_local: arguments must be nonzero");
    Int A = square_class(a), B = square_class(b);
    if (v.kind == Place::INFINITE) return (A < 0 && B < 0) ? -1 : 1;
    if (v.kind == Place::TWO) {
        // a = 2^alpha u, b = 2^beta w with u, w odd
        unsigned long alpha = 0, beta = 0;
        Int u = A, w = B;
        while (u % 2 == 0) {
            u /= 2;
            ++alpha;
        }
        while (w % 2 == 0) {
            w /= 2;
            ++beta;
        }
        auto eps = [](const Int& x) { return mod_floor((x - 1) / 2, Int(2)); };
        auto om = [](const Int& x) { return mod_floor((x * x - 1) / 8, Int(2)); };
        Int e = eps(u) * eps(w) + Int(alpha) * om(w) + Int(beta) * om(u);
        return mod_floor(e, Int(2)) == 0 ? 1 : -1;
    }
    const Int& p = v.p;
    unsigned long alpha = 0, beta = 0;
    Int u = A, w = B;
    while (u % p == 0) {
        u /= p;
        ++alpha;
    }
    while (w % p == 0) {
        w /= p;
        ++beta;
    }
    int sign = 1;
    if ((alpha * beta) % 2 == 1 && mod_floor((p - 1) / 2, Int(2)) == 1) sign = -sign;
    if (beta % 2 == 1) sign *= legendre(u, p);
    if (alpha % 2 == 1) sign *= legendre(w, p);
    return sign;
}

int hm_invariant(const DiagonalForm& d, const Place& v) {
    int s = 1;
    for (size_t i = 0; i < d.diag.size(); ++i)
        for (size_t j = i + 1; j < d.diag.size(); ++j) s *= hilbert_local(d.diag[i], d.diag[j], v);
    return s;
}

int pall_invariant(const QuadForm& q, const Place& v) {
    size_t n = q.n;
    std::vector<Rat> delta(n + 1);
    delta[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        QMat lead(k, k, Rat(0));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead(i, j) = q.a(i, j);
        delta[k] = det_exact_rat(lead);
        if (delta[k] == 0) throw std::invalid_argument("pall_invariant: vanishing leading minor");
    }
    int s = hilbert_local(Rat(-1), -delta[n], v);
    for (size_t i = 1; i < n; ++i) s *= hilbert_local(delta[i], -delta[i + 1], v);
    return s;
}

int alpha_beta_invariant(const Rat& alpha, const Rat& beta, unsigned long d, const Place& v) {
    if (alpha == 0 || alpha + beta * Rat(static_cast<long>(d)) == 0)
        throw std::invalid_argument("alpha_beta_invariant: singular configuration");
    if (d == 1) return 1;
    Rat dd(static_cast<long>(d));
    Rat apbd = alpha + beta * dd;
    // alpha^{d-1} only matters through its square class
    Rat alpha_pow = (d - 1) % 2 == 1 ? alpha : Rat(1);
    int s = hilbert_local(apbd * dd, alpha_pow * dd, v);
    Int ch2 = binomial(d - 1, 2);
    if (mod_floor(ch2, Int(2)) == 1) s *= hilbert_local(alpha, Rat(-1), v);
    if (d % 2 == 1) s *= hilbert_local(alpha, dd, v);
    s *= hilbert_local(dd - 1, dd, v);
    return s;
}

std::vector<Int> relevant_odd_primes(const DiagonalForm& d) {
    std::set<Int> primes;
    for (const Rat& r : d.diag) {
        for (const Int& part : {Int(r.get_num()), Int(r.get_den())}) {
            for (auto& [p, e] : factorize(abs(part)).factors) {
                (void)e;
                if (p > 2) primes.insert(p);
            }
        }
    }
    return {primes.begin(), primes.end()};
}

std::string RationalGramReport::describe() const {
    if (feasible) return "feasible";
    std::ostringstream os;
    if (det_not_square) os << "determinant is not a rational square";
    else if (bad_prime) os << "Hasse-Minkowski invariant -1 at p=" << bad_prime->get_str();
    return os.str();
}

RationalGramReport is_rational_gram(const QuadForm& q) {
    DiagonalForm d = polarize(q);
    for (const Rat& r : d.diag)
        if (r <= 0) throw std::invalid_argument("is_rational_gram: form not positive-definite");
    RationalGramReport rep{true};
    Rat det = 1;
    for (const Rat& r : d.diag) det *= r;
    Int cls = square_class(det);
    if (cls != 1) {
        rep.feasible = false;
        rep.det_not_square = true;
        return rep;
    }
    for (const Int& p : relevant_odd_primes(d)) {
        if (hm_invariant(d, Place::prime(p)) != 1) {
            rep.feasible = false;
            rep.bad_prime = p;
            return rep;
        }
    }
    return rep;
}

}  // namespace maxdet
