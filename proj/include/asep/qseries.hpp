#ifndef ASEP_QSERIES_HPP
#define ASEP_QSERIES_HPP

#include <asep/rational.hpp>

#include <vector>

namespace asep {

// [k]_q = 1 + q + ... + q^{k-1}; the empty sum at k = 0 is 0.
template <Ring R>
R q_int(int k, const R& q) {
    R acc(0), p(1);
    for (int i = 0; i < k; ++i) {
        acc = acc + p;
        p = p * q;
    }
    return acc;
}

/*
 * Gaussian binomial [n, k]_q via the Pascal recurrence
 * [n,k] = [n-1,k] + q^{n-k} [n-1,k-1]; division-free, so roots of unity and
 * q = 1 need no special casing.  Zero outside 0 <= k <= n.
 */
template <Ring R>
R q_binomial(int n, int k, const R& q) {
    if (k < 0 || k > n) return R(0);
    std::vector<R> row{R(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<R> next;
        next.reserve(m + 1);
        next.push_back(R(1));
        std::vector<R> powers(m + 1, R(1));
        for (int i = 1; i <= m; ++i) powers[i] = powers[i - 1] * q;
        for (int i = 1; i < m; ++i) next.push_back(row[i] + powers[m - i] * row[i - 1]);
        next.push_back(R(1));
        row = std::move(next);
    }
    return row[k];
}

// [n, k]_{1/q} = q^{-k(n-k)} [n, k]_q; needs invertible q.
template <Field F>
F q_binomial_recip(int n, int k, const F& q) {
    if (k < 0 || k > n) return F(0);
    if (q.is_zero()) throw std::domain_error("q_binomial_recip: q must be nonzero");
    return ring_pow(q.inverse(), static_cast<long long>(k) * (n - k)) * q_binomial(n, k, q);
}

inline long long binom2(long long n) { return n * (n - 1) / 2; }

} // namespace asep

#endif // ASEP_QSERIES_HPP
