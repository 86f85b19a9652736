#pragma once

// Dense exact matrices: generic rectangular storage, root-of-unity matrices
// in logarithmic form, Hermitian Gram matrices, and the exact linear algebra
// the rest of the project relies on (fraction-free determinants, Gram
// computation, characteristic polynomials, wedge minors).

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/cyc.hpp"

namespace maxdet {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

  private:
    size_t rows_, cols_;
    std::vector<T> d_;
};

using CMat = Mat<CycInt>;
using IMat = Mat<Int>;
using QMat = Mat<Rat>;

// Matrix over m-th roots of unity, stored logarithmically: entry e means
// zeta_m^e; ZERO_ENTRY marks a structural zero and is only legal when the
// matrix is flagged as a weighing matrix.
struct RootMatrix {
    static constexpr int ZERO_ENTRY = -1;

    unsigned m = 1;
    size_t n = 0;
    bool weighing = false;
    std::vector<int> e;  // n*n, values in 0..m-1 or ZERO_ENTRY

    RootMatrix() = default;
    RootMatrix(unsigned m_, size_t n_, bool weighing_ = false)
        : m(m_), n(n_), weighing(weighing_), e(n_ * n_, 0) {}

    int& at(size_t i, size_t j) { return e[i * n + j]; }
    int at(size_t i, size_t j) const { return e[i * n + j]; }
    bool is_zero(size_t i, size_t j) const { return at(i, j) == ZERO_ENTRY; }
    void set(size_t i, size_t j, long exponent) {
        long r = exponent % static_cast<long>(m);
        at(i, j) = static_cast<int>(r < 0 ? r + m : r);
    }
    CycInt entry(size_t i, size_t j) const {
        return is_zero(i, j) ? CycInt(m) : CycInt::root(m, at(i, j));
    }
    CMat to_cyc() const;
    bool operator==(const RootMatrix& o) const {
        return m == o.m && n == o.n && weighing == o.weighing && e == o.e;
    }
};

// Hermitian M * M^* matrix over Z[zeta_m].
struct GramMatrix {
    unsigned m = 1;
    size_t n = 0;
    CMat g;

    const CycInt& at(size_t i, size_t j) const { return g(i, j); }
    bool is_hermitian() const;
    // Sylvester's criterion via exact leading principal minors. Requires
    // m in {1,2,3,4,6} so minors are rational integers.
    bool is_positive_definite() const;
};

// M * M^*. Diagonal entries equal the number of nonzero entries per row.
GramMatrix gram(const RootMatrix& M);
GramMatrix gram_of(const CMat& M, unsigned m);

// Fraction-free Bareiss determinant over Z[zeta_m] (exact division at each
// step; an inexact division indicates corrupted input and throws).
CycInt det_exact(const CMat& M);
Int det_exact_int(const IMat& M);
Rat det_exact_rat(const QMat& M);

// abs2(det) as a nonnegative rational integer; requires m in {1,2,3,4,6}.
Int det_abs2(const RootMatrix& M);

// Characteristic polynomial of a Hermitian Gram matrix by Faddeev-LeVerrier,
// returned as [1, a1, ..., an] with p(x) = x^n + a1 x^{n-1} + ... + an.
// All divisions are asserted exact; coefficients are asserted rational.
std::vector<Int> charpoly_int(const GramMatrix& G);

// Matrix of all k x k minors, rows/columns indexed by lexicographically
// ordered k-subsets. Satisfies the Cauchy-Binet identity
// wedge(AB) = wedge(A) wedge(B).
CMat wedge_minors(const CMat& M, unsigned k);

std::vector<std::vector<size_t>> k_subsets(size_t n, unsigned k);

// ---- %RUM text format ----------------------------------------------------
// line 1: "%RUM <m>", line 2: "<n>", then n rows of n whitespace-separated
// tokens; each token is an exponent 0..m-1 or "." for a structural zero.
// Lines starting with '#' are comments.
RootMatrix parse_rum(std::istream& in);
RootMatrix parse_rum_string(const std::string& text);
RootMatrix load_rum(const std::string& path);
std::string serialize_rum(const RootMatrix& M, const std::string& comment = "");
void save_rum(const RootMatrix& M, const std::string& path, const std::string& comment = "");

// Convenience builders used across tests and constructions.
CMat cyc_identity(unsigned m, size_t n);
CMat mat_mul(const CMat& A, const CMat& B);
CMat conj_transpose(const CMat& A);

}  // namespace maxdet
