#ifndef ASEP_MATRIX_HPP
#define ASEP_MATRIX_HPP

#include <asep/rational.hpp>

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace asep {

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename R>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols, R fill)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, std::move(fill)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<R> data_;
};

template <Ring R>
DenseMatrix<R> identity_matrix(int n) {
    DenseMatrix<R> m(n, n, R(0));
    for (int i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
}

template <typename R>
DenseMatrix<R> mat_mul(const DenseMatrix<R>& a, const DenseMatrix<R>& b, const R& zero) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    DenseMatrix<R> c(a.rows(), b.cols(), zero);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const R& aik = a(i, k);
            for (int j = 0; j < b.cols(); ++j) c(i, j) = c(i, j) + aik * b(k, j);
        }
    return c;
}

template <Ring R>
DenseMatrix<R> mat_mul(const DenseMatrix<R>& a, const DenseMatrix<R>& b) {
    return mat_mul(a, b, R(0));
}

template <typename R>
DenseMatrix<R> mat_add(const DenseMatrix<R>& a, const DenseMatrix<R>& b) {
    DenseMatrix<R> c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

template <typename R>
DenseMatrix<R> mat_sub(const DenseMatrix<R>& a, const DenseMatrix<R>& b) {
    DenseMatrix<R> c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

// Bareiss interior divisions are exact; for field scalars plain division is
// the exact division of the domain.
inline Rational exact_domain_div(const Rational& a, const Rational& b) { return a / b; }
inline GaussianRational exact_domain_div(const GaussianRational& a, const GaussianRational& b) {
    return a / b;
}
inline BigInt exact_domain_div(const BigInt& a, const BigInt& b) { return a / b; }

/*
 * Fraction-free (Bareiss) determinant over an integral domain with exact
 * division.  Row swaps pick the first nonzero pivot; every interior division
 * is exact by the Sylvester identity.
 */
template <Ring R>
R determinant_bareiss(DenseMatrix<R> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!(m(i, k) == R(0))) { piv = i; break; }
        if (piv < 0) return R(0);
        if (piv != k) { m.swap_rows(k, piv); negate = !negate; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = exact_domain_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/*
 * Division-free determinant by Laplace expansion along rows, memoized over
 * column subsets: O(2^n · n) ring multiplications.  Suited to polynomial
 * entries; sizes here never exceed 8.
 */
template <Ring R>
R determinant_expansion(const DenseMatrix<R>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n > 20) throw std::invalid_argument("determinant_expansion: matrix too large");
    if (n == 0) return R(1);
    // memo[mask] = det of the minor on the last popcount(mask) rows and the
    // column set `mask`; built bottom-up by subset size.
    std::vector<R> memo(std::size_t(1) << n, R(0));
    memo[0] = R(1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        int row = n - size;
        R acc(0);
        bool neg = false;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!(m(row, j) == R(0)))
                acc = neg ? acc - m(row, j) * memo[mask & ~(1u << j)]
                          : acc + m(row, j) * memo[mask & ~(1u << j)];
            neg = !neg;
        }
        memo[mask] = acc;
    }
    return memo[(std::size_t(1) << n) - 1];
}

namespace detail {
template <typename R>
struct is_plain_scalar : std::false_type {};
template <>
struct is_plain_scalar<Rational> : std::true_type {};
template <>
struct is_plain_scalar<GaussianRational> : std::true_type {};
} // namespace detail

// Exact determinant over scalars or polynomial rings.
template <Ring R>
R exact_determinant(const DenseMatrix<R>& m) {
    if constexpr (detail::is_plain_scalar<R>::value)
        return determinant_bareiss(m);
    else
        return determinant_expansion(m);
}

/*
 * Solve A·x = b over a field by Gauss-Jordan elimination with first-nonzero
 * pivoting.  Throws SingularSystemError when A is singular.
 */
template <Field F>
std::vector<F> solve_linear(DenseMatrix<F> a, std::vector<F> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) throw SingularSystemError("solve_linear: singular matrix");
        if (piv != col) { a.swap_rows(col, piv); std::swap(b[col], b[piv]); }
        F inv = a(col, col).inverse();
        for (int j = col; j < n; ++j) a(col, j) = a(col, j) * inv;
        b[col] = b[col] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            F f = a(i, col);
            for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
            b[i] = b[i] - f * b[col];
        }
    }
    return b;
}

} // namespace asep

#endif // ASEP_MATRIX_HPP
