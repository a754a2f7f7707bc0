#ifndef ASEP_MOTZKIN_HPP
#define ASEP_MOTZKIN_HPP

#include <asep/band.hpp>
#include <asep/matrix.hpp>
#include <asep/partition.hpp>
#include <asep/polynomial.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace asep {

enum class Step : unsigned char { Up, Flat, Down };

using MotzkinPath = std::vector<Step>;

inline constexpr int kMotzkinEnumerationCap = 12;

inline char step_char(Step s) {
    switch (s) {
        case Step::Up: return 'U';
        case Step::Flat: return 'F';
        default: return 'D';
    }
}

/*
 * All partial Motzkin paths from (0,0) to (N,r): N steps in {U,F,D}, height
 * never negative, net height r.  Depth-first with height pruning; the cap
 * keeps brute force in the "runs in seconds" regime.
 */
inline std::vector<MotzkinPath> enumerate_paths(int n, int r, int cap = kMotzkinEnumerationCap) {
    if (r < 0 || r > n) return {};
    if (n > cap) throw std::invalid_argument("enumerate_paths: length over enumeration cap");
    std::vector<MotzkinPath> out;
    MotzkinPath cur;
    cur.reserve(n);
    auto dfs = [&](auto&& self, int pos, int h) -> void {
        if (pos == n) {
            if (h == r) out.push_back(cur);
            return;
        }
        int remaining = n - pos;
        // prune: |h - r| must be reachable in the remaining steps
        if (h + remaining < r || h - remaining > r) return;
        for (Step s : {Step::Up, Step::Flat, Step::Down}) {
            int nh = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
            if (nh < 0) continue;
            cur.push_back(s);
            self(self, pos + 1, nh);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

// Product of step weights c_{h,h'} along a path starting at height `h0`.
template <typename R>
R path_weight(const BandOperator<R>& w, const MotzkinPath& path, const R& one, int h0 = 0) {
    R acc = one;
    int h = h0;
    for (Step s : path) {
        int nh = h + (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
        acc = acc * w.entry(h, nh);
        h = nh;
    }
    return acc;
}

// Generating function of all C-Motzkin paths (0,0) -> (N,r): the brute-force
// combinatorial value of <W| C^N |V^r>.
template <Ring R>
R path_gf(const BandOperator<R>& w, int n, int r, int cap = kMotzkinEnumerationCap) {
    R acc(0);
    for (const auto& path : enumerate_paths(n, r, cap)) acc = acc + path_weight(w, path, R(1));
    return acc;
}

/*
 * The Hankel-determinant ratio built from the moments Z_N = path_gf(w, N, 0):
 * numerator entry (i,j) = Z_{lambda_i + 2m - 2 - i - j} (0-indexed), denominator
 * entry (i,j) = Z_{2m - 2 - i - j}.  Exact division (scalar or polynomial).
 */
template <Ring R>
std::pair<DenseMatrix<R>, DenseMatrix<R>> hankel_pair(const std::vector<R>& z,
                                                      const Partition& lambda) {
    const int m = lambda.length();
    DenseMatrix<R> num(m, m, R(0)), den(m, m, R(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            num(i, j) = z.at(lambda.part(i) + 2 * (m - 1) - i - j);
            den(i, j) = z.at(2 * (m - 1) - i - j);
        }
    return {std::move(num), std::move(den)};
}

template <Ring R>
R generic_K(const BandOperator<R>& w, const Partition& lambda, int cap = kMotzkinEnumerationCap) {
    const int m = lambda.length();
    if (m == 0) return R(1);
    int max_n = lambda.part(0) + 2 * (m - 1);
    std::vector<R> z;
    z.reserve(max_n + 1);
    for (int n = 0; n <= max_n; ++n) z.push_back(path_gf(w, n, 0, cap));
    auto [num, den] = hankel_pair(z, lambda);
    R den_det = exact_determinant(den);
    if (den_det == R(0)) throw std::domain_error("generic_K: singular Hankel denominator");
    return exact_div(exact_determinant(num), den_det);
}

// k_r = prod_{i<r} c_{i,i+1}, the weight of the forced ascent.
template <Ring R>
R up_step_product(const BandOperator<R>& w, int r) {
    R acc(1);
    for (int i = 0; i < r; ++i) acc = acc * w.entry(i, i + 1);
    return acc;
}

template <typename R>
struct DetMotzkinCheck {
    bool holds;
    R lhs, rhs;  // cross-multiplied: path_gf·det(den)  vs  k_r·det(num)
};

// (1/k_r)·CMotz(N,r) = K_{(N-r,0^r)}, checked cross-multiplied so no
// division is needed.
template <Ring R>
DetMotzkinCheck<R> verify_det_motzkin(const BandOperator<R>& w, int n, int r,
                                      int cap = kMotzkinEnumerationCap) {
    Partition lambda = Partition::hook_shape(n - r, r);
    int max_n = lambda.part(0) + 2 * r;
    std::vector<R> z;
    for (int k = 0; k <= max_n; ++k) z.push_back(path_gf(w, k, 0, cap));
    auto [num, den] = hankel_pair(z, lambda);
    R lhs = path_gf(w, n, r, cap) * exact_determinant(den);
    R rhs = up_step_product(w, r) * exact_determinant(num);
    return {lhs == rhs, lhs, rhs};
}

/*
 * Endpoint configurations of the two planar networks behind the determinant
 * identity.  Sources/sinks sit on the x-axis; only the leftmost source
 * placement differs between the two:
 *
 *   denominator:  A_i = (i, 0), i = 0..r           B_j = (2r - j, 0)
 *   numerator:    A_0 = (r - N, 0), A_i = (i, 0)   B_j = (2r - j, 0)
 */
struct KmlgvConfig {
    enum class Kind { Numerator, Denominator } kind;
    int n = 0;  // path length N; used by the numerator configuration
    int r = 0;

    int source_x(int i) const {
        if (kind == Kind::Numerator && i == 0) return r - n;
        return i;
    }
    int sink_x(int j) const { return 2 * r - j; }
};

// One path per source, recorded with its vertex set for disjointness tests.
struct LatticePath {
    int start_x;
    MotzkinPath steps;
    std::vector<std::pair<int, int>> vertices() const {
        std::vector<std::pair<int, int>> v;
        int x = start_x, h = 0;
        v.emplace_back(x, h);
        for (Step s : steps) {
            ++x;
            h += (s == Step::Up ? 1 : s == Step::Down ? -1 : 0);
            v.emplace_back(x, h);
        }
        return v;
    }
};

using PathCollection = std::vector<LatticePath>;

/*
 * All pairwise vertex-disjoint path collections connecting A_i -> B_{sigma(i)}
 * for the identity permutation; enumerate_disjoint_collections_signed sums
 * over every permutation with sign (non-identity terms vanish for these
 * planar configurations, which the checker asserts).
 */
inline std::vector<PathCollection> enumerate_disjoint_collections(
    const KmlgvConfig& cfg, const std::vector<int>& sigma, int cap = kMotzkinEnumerationCap) {
    const int k = cfg.r + 1;
    std::vector<std::vector<LatticePath>> choices(k);
    for (int i = 0; i < k; ++i) {
        int len = cfg.sink_x(sigma[i]) - cfg.source_x(i);
        if (len < 0) return {};
        for (auto& p : enumerate_paths(len, 0, cap))
            choices[i].push_back({cfg.source_x(i), std::move(p)});
    }
    std::vector<PathCollection> out;
    PathCollection cur;
    std::set<std::pair<int, int>> used;
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (const auto& cand : choices[i]) {
            auto vs = cand.vertices();
            bool clash = false;
            for (const auto& v : vs)
                if (used.count(v)) { clash = true; break; }
            if (clash) continue;
            for (const auto& v : vs) used.insert(v);
            cur.push_back(cand);
            self(self, i + 1);
            cur.pop_back();
            for (const auto& v : vs) used.erase(v);
        }
    };
    dfs(dfs, 0);
    return out;
}

inline std::vector<PathCollection> enumerate_disjoint_collections(
    const KmlgvConfig& cfg, int cap = kMotzkinEnumerationCap) {
    std::vector<int> identity(cfg.r + 1);
    for (int i = 0; i <= cfg.r; ++i) identity[i] = i;
    return enumerate_disjoint_collections(cfg, identity, cap);
}

template <typename R>
struct KmlgvCheck {
    bool holds;
    bool only_identity_contributes;
    R det, collection_gf;
    std::size_t identity_collections;
};

/*
 * KMLGV check: det of the Motzkin weight matrix equals the signed sum over
 * permutations of disjoint-collection weights; for these configurations all
 * collections ride the identity, so the sum is the unsigned identity term.
 */
template <Ring R>
KmlgvCheck<R> verify_kmlgv(const BandOperator<R>& w, const KmlgvConfig& cfg,
                           int cap = kMotzkinEnumerationCap) {
    const int k = cfg.r + 1;
    DenseMatrix<R> weight(k, k, R(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int len = cfg.sink_x(j) - cfg.source_x(i);
            weight(i, j) = len < 0 ? R(0) : path_gf(w, len, 0, cap);
        }
    R det = exact_determinant(weight);

    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i) sigma[i] = i;
    R total(0);
    bool only_identity = true;
    std::size_t identity_count = 0;
    do {
        bool is_identity = true;
        int inversions = 0;
        for (int i = 0; i < k; ++i) {
            if (sigma[i] != i) is_identity = false;
            for (int j = i + 1; j < k; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        }
        auto collections = enumerate_disjoint_collections(cfg, sigma, cap);
        if (!collections.empty() && !is_identity) only_identity = false;
        if (is_identity) identity_count = collections.size();
        for (const auto& coll : collections) {
            R wgt(1);
            for (const auto& path : coll) wgt = wgt * path_weight(w, path.steps, R(1));
            total = (inversions % 2 == 0) ? total + wgt : total - wgt;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return {det == total, only_identity, det, total, identity_count};
}

} // namespace asep

#endif // ASEP_MOTZKIN_HPP
