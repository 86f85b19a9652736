#include "maxdet/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace maxdet {

CMat RootMatrix::to_cyc() const {
    CMat A(n, n, CycInt(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A(i, j) = entry(i, j);
    return A;
}

bool GramMatrix::is_hermitian() const {
    for (size_t i = 0; i < n; ++i) {
        if (!g(i, i).is_rational()) return false;
        for (size_t j = i + 1; j < n; ++j)
            if (g(i, j) != g(j, i).conj()) return false;
    }
    return true;
}

bool GramMatrix::is_positive_definite() const {
    for (size_t k = 1; k <= n; ++k) {
        CMat lead(k, k, CycInt(m));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
        if (det_exact(lead).sign_real() <= 0) return false;
    }
    return true;
}

GramMatrix gram_of(const CMat& M, unsigned m) {
    size_t n = M.rows();
    GramMatrix G;
    G.m = m;
    G.n = n;
    G.g = CMat(n, n, CycInt(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            CycInt s(m);
            for (size_t k = 0; k < M.cols(); ++k) s += M(i, k) * M(j, k).conj();
            G.g(i, j) = s;
        }
    return G;
}

GramMatrix gram(const RootMatrix& M) {
    for (size_t i = 0; i < M.n && !M.weighing; ++i)
        for (size_t j = 0; j < M.n; ++j)
            if (M.is_zero(i, j))
                throw std::invalid_argument("gram: ZERO entry in a non-weighing matrix");
    return gram_of(M.to_cyc(), M.m);
}

namespace {

// Generic Bareiss over an integral domain. Needs: zero test, multiplication,
// subtraction, exact division, and a way to pick a nonzero pivot.
template <typename T, typename IsZero, typename DivExact>
T bareiss_det(Mat<T> A, const T& one, IsZero is_zero, DivExact div) {
    size_t n = A.rows();
    if (n != A.cols()) throw std::invalid_argument("det: non-square input");
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(A(k, k))) {
            size_t p = k + 1;
            while (p < n && is_zero(A(p, k))) ++p;
            if (p == n) return A(k, k);  // column is zero below the pivot: det 0
            for (size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                T num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                A(i, j) = div(num, prev);
            }
        prev = A(k, k);
    }
    T det = A(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

}  // namespace

CycInt det_exact(const CMat& M) {
    if (M.rows() == 0) throw std::invalid_argument("det_exact: empty matrix");
    unsigned m = M(0, 0).order();
    return bareiss_det<CycInt>(
        M, CycInt(m, Int(1)), [](const CycInt& z) { return z.is_zero(); },
        [](const CycInt& a, const CycInt& b) { return a.divide_exact(b); });
}

Int det_exact_int(const IMat& M) {
    return bareiss_det<Int>(
        M, Int(1), [](const Int& z) { return z == 0; },
        [](const Int& a, const Int& b) { return divexact(a, b, "det"); });
}

Rat det_exact_rat(const QMat& M) {
    return bareiss_det<Rat>(
        M, Rat(1), [](const Rat& z) { return z == 0; },
        [](const Rat& a, const Rat& b) { return a / b; });
}

Int det_abs2(const RootMatrix& M) {
    return det_exact(M.to_cyc()).abs2();
}

std::vector<Int> charpoly_int(const GramMatrix& G) {
    if (!G.is_hermitian()) throw std::invalid_argument("charpoly_int: input not Hermitian");
    size_t n = G.n;
    unsigned m = G.m;
    CMat Mk = G.g;  // M1 = A
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    for (size_t k = 1; k <= n; ++k) {
        CycInt tr(m);
        for (size_t i = 0; i < n; ++i) tr += Mk(i, i);
        // c_k = -tr(M_k) / k, exact and rational for Hermitian input.
        CycInt ck = (-tr).divide_exact(Int(static_cast<long>(k)));
        if (!ck.is_rational()) throw std::logic_error("charpoly_int: non-rational coefficient");
        coeffs[k] = ck.to_int();
        if (k == n) break;
        // M_{k+1} = A (M_k + c_k I)
        CMat shifted = Mk;
        for (size_t i = 0; i < n; ++i) shifted(i, i) += ck;
        Mk = mat_mul(G.g, shifted);
    }
    return coeffs;
}

std::vector<std::vector<size_t>> k_subsets(size_t n, unsigned k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(k);
    std::function<void(size_t, unsigned)> rec = [&](size_t start, unsigned depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

CMat wedge_minors(const CMat& M, unsigned k) {
    size_t n = M.rows();
    if (k > n || k > M.cols()) throw std::invalid_argument("wedge_minors: k too large");
    unsigned m = M(0, 0).order();
    auto rows = k_subsets(M.rows(), k);
    auto cols = k_subsets(M.cols(), k);
    CMat W(rows.size(), cols.size(), CycInt(m));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t b = 0; b < cols.size(); ++b) {
            CMat sub(k, k, CycInt(m));
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) sub(i, j) = M(rows[a][i], cols[b][j]);
            W(a, b) = det_exact(sub);
        }
    return W;
}

// ---- %RUM ------------------------------------------------------------

RootMatrix parse_rum(std::istream& in) {
    auto next_content_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_content_line(line)) throw std::runtime_error("RUM: empty input");
    std::istringstream hdr(line);
    std::string magic;
    long m = 0;
    hdr >> magic >> m;
    if (magic != "%RUM" || m < 1) throw std::runtime_error("RUM: bad header line: " + line);
    if (!next_content_line(line)) throw std::runtime_error("RUM: missing dimension line");
    long n = 0;
    {
        std::istringstream dim(line);
        if (!(dim >> n) || n < 1) throw std::runtime_error("RUM: bad dimension line: " + line);
    }
    RootMatrix M(static_cast<unsigned>(m), static_cast<size_t>(n));
    bool has_zero = false;
    for (long i = 0; i < n; ++i) {
        if (!next_content_line(line)) throw std::runtime_error("RUM: truncated matrix body");
        std::istringstream row(line);
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(row >> tok)) throw std::runtime_error("RUM: short row " + std::to_string(i + 1));
            if (tok == ".") {
                M.at(i, j) = RootMatrix::ZERO_ENTRY;
                has_zero = true;
            } else {
                long v;
                try {
                    v = std::stol(tok);
                } catch (...) {
                    throw std::runtime_error("RUM: bad token '" + tok + "'");
                }
                if (v < 0 || v >= m) throw std::runtime_error("RUM: exponent out of range: " + tok);
                M.at(i, j) = static_cast<int>(v);
            }
        }
        std::string extra;
        if (row >> extra) throw std::runtime_error("RUM: trailing token '" + extra + "'");
    }
    M.weighing = has_zero;
    return M;
}

RootMatrix parse_rum_string(const std::string& text) {
    std::istringstream in(text);
    return parse_rum(in);
}

RootMatrix load_rum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return parse_rum(in);
    } catch (const std::exception& ex) {
        throw std::runtime_error(path + ": " + ex.what());
    }
}

std::string serialize_rum(const RootMatrix& M, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) {
        std::istringstream cs(comment);
        std::string cl;
        while (std::getline(cs, cl)) os << "# " << cl << "\n";
    }
    os << "%RUM " << M.m << "\n" << M.n << "\n";
    int width = M.m >= 11 ? 2 : 1;
    for (size_t i = 0; i < M.n; ++i) {
        for (size_t j = 0; j < M.n; ++j) {
            if (j) os << ' ';
            std::string tok = M.is_zero(i, j) ? "." : std::to_string(M.at(i, j));
            os << std::string(width > static_cast<int>(tok.size()) ? width - tok.size() : 0, ' ')
               << tok;
        }
        os << "\n";
    }
    return os.str();
}

void save_rum(const RootMatrix& M, const std::string& path, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_rum(M, comment);
}

CMat cyc_identity(unsigned m, size_t n) {
    CMat I(n, n, CycInt(m));
    for (size_t i = 0; i < n; ++i) I(i, i) = CycInt(m, Int(1));
    return I;
}

CMat mat_mul(const CMat& A, const CMat& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    unsigned m = A.rows() && A.cols() ? A(0, 0).order() : 1;
    CMat C(A.rows(), B.cols(), CycInt(m));
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t k = 0; k < A.cols(); ++k) {
            if (A(i, k).is_zero()) continue;
            for (size_t j = 0; j < B.cols(); ++j) {
                if (B(k, j).is_zero()) continue;
                C(i, j) += A(i, k) * B(k, j);
            }
        }
    return C;
}

CMat conj_transpose(const CMat& A) {
    unsigned m = A.rows() && A.cols() ? A(0, 0).order() : 1;
    CMat T(A.cols(), A.rows(), CycInt(m));
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j).conj();
    return T;
}

}  // namespace maxdet
