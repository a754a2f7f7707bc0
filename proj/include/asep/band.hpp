#ifndef ASEP_BAND_HPP
#define ASEP_BAND_HPP

#include <asep/matrix.hpp>
#include <asep/rational.hpp>

#include <algorithm>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace asep {

/*
 * Lazily generated band matrix indexed by the non-negative integers:
 * entry(i,j) = 0 whenever j-i > upper or i-j > lower.  The generator must be
 * a pure function of (i,j); truncations of growing dimension then agree on
 * overlapping entries by construction.
 */
template <typename R>
class BandOperator {
public:
    BandOperator() = default;
    BandOperator(int lower, int upper, std::function<R(int, int)> gen, R zero)
        : lower_(lower), upper_(upper), gen_(std::move(gen)), zero_(std::move(zero)) {}

    int lower_bandwidth() const { return lower_; }
    int upper_bandwidth() const { return upper_; }
    const R& zero() const { return zero_; }

    R entry(int i, int j) const {
        if (j - i > upper_ || i - j > lower_) return zero_;
        return gen_(i, j);
    }

    DenseMatrix<R> truncation(int dim) const {
        DenseMatrix<R> m(dim, dim, zero_);
        for (int i = 0; i < dim; ++i) {
            int jlo = std::max(0, i - lower_), jhi = std::min(dim - 1, i + upper_);
            for (int j = jlo; j <= jhi; ++j) m(i, j) = gen_(i, j);
        }
        return m;
    }

private:
    int lower_ = 0, upper_ = 0;
    std::function<R(int, int)> gen_;
    R zero_;
};

template <typename R>
BandOperator<R> band_from_diagonals(std::function<R(int)> sub, std::function<R(int)> diag,
                                    std::function<R(int)> sup, R zero) {
    auto gen = [sub = std::move(sub), diag = std::move(diag), sup = std::move(sup)](int i, int j) {
        if (j == i) return diag(i);
        if (j == i + 1) return sup(i);
        return sub(j);  // i == j + 1: entry (j+1, j)
    };
    return BandOperator<R>(1, 1, std::move(gen), std::move(zero));
}

template <typename R>
BandOperator<R> band_add(const BandOperator<R>& x, const BandOperator<R>& y) {
    auto gen = [x, y](int i, int j) { return x.entry(i, j) + y.entry(i, j); };
    return BandOperator<R>(std::max(x.lower_bandwidth(), y.lower_bandwidth()),
                           std::max(x.upper_bandwidth(), y.upper_bandwidth()), gen, x.zero());
}

template <typename R>
BandOperator<R> band_scale(R c, const BandOperator<R>& x) {
    auto gen = [c, x](int i, int j) { return c * x.entry(i, j); };
    return BandOperator<R>(x.lower_bandwidth(), x.upper_bandwidth(), gen, x.zero());
}

// Entrywise product X·Y summed over the finite overlap window; bandwidths add.
template <typename R>
BandOperator<R> band_product(const BandOperator<R>& x, const BandOperator<R>& y) {
    int lower = x.lower_bandwidth() + y.lower_bandwidth();
    int upper = x.upper_bandwidth() + y.upper_bandwidth();
    auto gen = [x, y](int i, int j) {
        int klo = std::max(0, std::max(i - x.lower_bandwidth(), j - y.upper_bandwidth()));
        int khi = std::max(-1, std::min(i + x.upper_bandwidth(), j + y.lower_bandwidth()));
        R acc = x.zero();
        for (int k = klo; k <= khi; ++k) acc = acc + x.entry(i, k) * y.entry(k, j);
        return acc;
    };
    return BandOperator<R>(lower, upper, gen, x.zero());
}

// Commutator XY - YX, materialized entrywise from the band products.
template <typename R>
BandOperator<R> band_commutator(const BandOperator<R>& x, const BandOperator<R>& y) {
    BandOperator<R> xy = band_product(x, y), yx = band_product(y, x);
    auto gen = [xy, yx](int i, int j) { return xy.entry(i, j) - yx.entry(i, j); };
    return BandOperator<R>(xy.lower_bandwidth(), xy.upper_bandwidth(), gen, x.zero());
}

/*
 * <W| M_1 M_2 ... M_N |V^r> with <W| = (1,0,0,...) and |V^r> the unit vector
 * at index r.  The truncation dimension is chosen from the bandwidths so the
 * reachable support fits with margin; iterated row-vector x band-matrix
 * products keep the cost linear in the dimension.  The result does not
 * depend on the truncation once the support fits (tested at +margin).
 *
 * `one` seeds <W|; it also supplies the ring for types that cannot be built
 * from an int (truncated series).
 */
template <typename R>
R eval_bra_word_ket(std::span<const BandOperator<R>> ops, int r, const R& one,
                    int extra_margin = 2) {
    R zero = one - one;
    int spread = 0;
    for (const auto& op : ops) spread += op.lower_bandwidth() + op.upper_bandwidth();
    int dim = 1 + r + spread + extra_margin;
    std::vector<R> v(dim, zero);
    v[0] = one;
    for (const auto& op : ops) {
        std::vector<R> next(dim, zero);
        for (int i = 0; i < dim; ++i) {
            if (v[i] == zero) continue;
            int jlo = std::max(0, i - op.lower_bandwidth());
            int jhi = std::min(dim - 1, i + op.upper_bandwidth());
            for (int j = jlo; j <= jhi; ++j) next[j] = next[j] + v[i] * op.entry(i, j);
        }
        v = std::move(next);
    }
    return v[r];
}

template <Ring R>
R eval_bra_word_ket(const std::vector<BandOperator<R>>& ops, int r, int extra_margin = 2) {
    return eval_bra_word_ket(std::span<const BandOperator<R>>(ops), r, R(1), extra_margin);
}

// N copies of the same operator.
template <Ring R>
R eval_bra_power_ket(const BandOperator<R>& op, int n, int r, int extra_margin = 2) {
    std::vector<BandOperator<R>> ops(n, op);
    return eval_bra_word_ket(ops, r, extra_margin);
}

// <W| C^n |V> for n = 0..max_n in one sweep.
template <Ring R>
std::vector<R> bracket_power_sequence(const BandOperator<R>& op, int max_n, int extra_margin = 2) {
    int spread = max_n * (op.lower_bandwidth() + op.upper_bandwidth());
    int dim = 1 + spread + extra_margin;
    std::vector<R> v(dim, op.zero());
    v[0] = R(1);
    std::vector<R> out;
    out.reserve(max_n + 1);
    out.push_back(v[0]);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<R> next(dim, op.zero());
        for (int i = 0; i < dim; ++i) {
            if (v[i] == op.zero()) continue;
            int jlo = std::max(0, i - op.lower_bandwidth());
            int jhi = std::min(dim - 1, i + op.upper_bandwidth());
            for (int j = jlo; j <= jhi; ++j) next[j] = next[j] + v[i] * op.entry(i, j);
        }
        v = std::move(next);
        out.push_back(v[0]);
    }
    return out;
}

} // namespace asep

#endif // ASEP_BAND_HPP
