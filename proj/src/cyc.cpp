#include "maxdet/cyc.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace maxdet {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Quotient of monic-divisor polynomial division over Z (exact by
// construction for cyclotomic factors of x^m - 1).
IntPoly poly_div_monicish(const IntPoly& num, const IntPoly& den) {
    IntPoly r = num;
    int dn = static_cast<int>(r.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (dd < 0 || den[dd] == 0) throw std::logic_error("poly_div: bad divisor");
    IntPoly q(dn - dd + 1, Int(0));
    for (int k = dn - dd; k >= 0; --k) {
        Int coef = divexact(r[k + dd], den[dd], "poly_div");
        q[k] = coef;
        if (coef != 0)
            for (int j = 0; j <= dd; ++j) r[k + j] -= coef * den[j];
    }
    for (const Int& c : r)
        if (c != 0) throw std::logic_error("poly_div: inexact");
    return q;
}

IntPoly compute_cyclotomic(unsigned m) {
    // x^m - 1
    IntPoly num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const IntPoly& phi_d = cyclotomic_poly(d);
        num = poly_div_monicish(num, phi_d);
    }
    return num;
}

}  // namespace

const IntPoly& cyclotomic_poly(unsigned m) {
    static std::map<unsigned, IntPoly> cache;
    // compute_cyclotomic recurses back into cyclotomic_poly for the proper
    // divisors of m, so the lock must be reentrant.
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m == 1) return cache.emplace(1u, IntPoly{Int(-1), Int(1)}).first->second;
    IntPoly phi = compute_cyclotomic(m);
    return cache.emplace(m, std::move(phi)).first->second;
}

unsigned CycInt::check_order(unsigned m) {
    if (m == 0) throw std::invalid_argument("CycInt: order m must be >= 1");
    return m;
}

void CycInt::canonicalize() {
    const IntPoly& phi = cyclotomic_poly(m_);
    const unsigned deg = static_cast<unsigned>(phi.size()) - 1;  // = phi(m)
    // Reduce modulo Phi_m (monic), top coefficient down.
    for (unsigned k = m_; k-- > deg;) {
        Int coef = c_[k];
        if (coef == 0) continue;
        c_[k] = 0;
        for (unsigned j = 0; j < deg; ++j) c_[k - deg + j] -= coef * phi[j];
    }
}

CycInt CycInt::root(unsigned m, long k) {
    CycInt z(m);
    long r = k % static_cast<long>(m);
    if (r < 0) r += m;
    z.c_[static_cast<unsigned>(r)] = 1;
    z.canonicalize();
    return z;
}

CycInt CycInt::from_coeffs(unsigned m, const std::vector<Int>& coeffs) {
    CycInt z(m);
    for (size_t i = 0; i < coeffs.size(); ++i) z.c_[i % m] += coeffs[i];
    z.canonicalize();
    return z;
}

bool CycInt::is_zero() const {
    for (const Int& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Int CycInt::to_int() const {
    if (!is_rational()) throw std::domain_error("CycInt::to_int: not rational: " + str());
    return c_[0];
}

CycInt CycInt::operator-() const {
    CycInt z = *this;
    for (Int& c : z.c_) c = -c;
    return z;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    assert(m_ == o.m_);
    for (unsigned i = 0; i < m_; ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    assert(m_ == o.m_);
    for (unsigned i = 0; i < m_; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
    assert(m_ == o.m_);
    std::vector<Int> prod(m_, Int(0));
    for (unsigned i = 0; i < m_; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (o.c_[j] == 0) continue;
            prod[(i + j) % m_] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(prod);
    canonicalize();
    return *this;
}

CycInt& CycInt::operator*=(const Int& k) {
    for (Int& c : c_) c *= k;
    return *this;
}

CycInt CycInt::conj() const { return galois(m_ - 1 == 0 ? 1 : m_ - 1); }

CycInt CycInt::galois(unsigned k) const {
    k %= m_;
    if (m_ > 1 && std::gcd(k, m_) != 1) throw std::invalid_argument("CycInt::galois: k not coprime to m");
    CycInt z(m_);
    for (unsigned i = 0; i < m_; ++i) {
        if (c_[i] == 0) continue;
        z.c_[(static_cast<unsigned long>(i) * k) % m_] += c_[i];
    }
    z.canonicalize();
    return z;
}

Int CycInt::abs2() const {
    if (m_ != 1 && m_ != 2 && m_ != 3 && m_ != 4 && m_ != 6)
        throw std::domain_error("CycInt::abs2: integer-valued only for m in {1,2,3,4,6}");
    return abs2_cyc().to_int();
}

CycInt CycInt::abs2_cyc() const {
    CycInt z = *this * conj();
    if (z != z.conj()) throw std::logic_error("CycInt::abs2_cyc: result not conjugation-fixed");
    return z;
}

Int CycInt::norm() const {
    CycInt prod(m_, Int(1));
    for (unsigned k = 1; k <= m_; ++k) {
        if (std::gcd(k, m_) != 1) continue;
        prod *= galois(k % m_ == 0 ? m_ : k);
    }
    return prod.to_int();
}

CycInt CycInt::divide_exact(const CycInt& o) const {
    if (o.is_zero()) throw std::domain_error("CycInt::divide_exact: zero divisor");
    if (o.is_rational()) return divide_exact(o.c_[0]);
    // a / b = a * prod_{sigma != id} sigma(b) / N(b)
    CycInt cof(m_, Int(1));
    for (unsigned k = 2; k <= m_; ++k) {
        if (std::gcd(k, m_) != 1) continue;
        cof *= o.galois(k % m_);
    }
    Int nb = (CycInt(o) * cof).to_int();
    return (*this * cof).divide_exact(nb);
}

CycInt CycInt::divide_exact(const Int& k) const {
    CycInt z = *this;
    for (Int& c : z.c_) c = divexact(c, k, "CycInt::divide_exact");
    return z;
}

int CycInt::sign_real() const {
    Int v = to_int();
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < m_; ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        first = false;
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycInt promote(const CycInt& z, unsigned target_m) {
    unsigned m = z.order();
    if (target_m % m != 0) throw std::invalid_argument("promote: order does not divide target");
    unsigned k = target_m / m;
    std::vector<Int> coeffs(target_m, Int(0));
    for (unsigned i = 0; i < m; ++i) coeffs[i * k] = z.coeffs()[i];
    return CycInt::from_coeffs(target_m, coeffs);
}

}  // namespace maxdet
