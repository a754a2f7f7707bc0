#ifndef ASEP_CHAIN_HPP
#define ASEP_CHAIN_HPP

#include <asep/matrix.hpp>
#include <asep/moments.hpp>
#include <asep/params.hpp>
#include <asep/usw.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace asep {

/*
 * Two-species exclusion process on N sites with r light particles: states
 * are words over {0,1,2} ('0' hole, '1' light, '2' heavy) with exactly r
 * ones.  Heavy particles exchange with everything and cross the boundaries;
 * light particles only exchange in the bulk.  Discrete time, probabilities
 * divided by N+1, self-loop absorbing the remainder.  With r = 0 this is
 * the single-species process under 2 <-> particle, 0 <-> hole.
 */
template <Field F>
struct ChainRates {
    F alpha, beta, gamma, delta, q;
    F u = F(1);
};

template <Field F>
struct ChainSpec {
    int n_sites = 0, r = 0;
    ChainRates<F> rates;
    std::vector<std::string> states;
    DenseMatrix<F> P;

    int state_index(const std::string& s) const {
        auto it = std::lower_bound(states.begin(), states.end(), s);
        if (it == states.end() || *it != s)
            throw std::invalid_argument("ChainSpec: unknown state " + s);
        return static_cast<int>(it - states.begin());
    }
};

inline std::vector<std::string> enumerate_states(int n, int r) {
    std::vector<std::string> out;
    std::string cur(n, '0');
    auto rec = [&](auto&& self, int pos, int ones) -> void {
        if (pos == n) {
            if (ones == r) out.push_back(cur);
            return;
        }
        if (ones + (n - pos) < r) return;
        for (char ch : {'0', '1', '2'}) {
            if (ch == '1' && ones == r) continue;
            cur[pos] = ch;
            self(self, pos + 1, ones + (ch == '1' ? 1 : 0));
        }
    };
    rec(rec, 0, 0);
    return out;  // lexicographic by construction
}

template <Field F>
ChainSpec<F> build_chain(int n, int r, ChainRates<F> rates) {
    if (n < 1 || r < 0 || r > n) throw std::invalid_argument("build_chain: need N >= 1, 0 <= r <= N");
    ChainSpec<F> chain;
    chain.n_sites = n;
    chain.r = r;
    chain.rates = rates;
    chain.states = enumerate_states(n, r);
    const int m = static_cast<int>(chain.states.size());
    chain.P = DenseMatrix<F>(m, m, F(0));
    const F scale = F(n + 1).inverse();

    for (int i = 0; i < m; ++i) {
        const std::string& s = chain.states[i];
        F total(0);
        auto add = [&](const std::string& t, const F& rate) {
            F p = rate * scale;
            chain.P(i, chain.state_index(t)) += p;
            total += p;
        };
        for (int k = 0; k + 1 < n; ++k) {
            char a = s[k], b = s[k + 1];
            // right exchange at rate u: 21, 20, 10 -> swapped
            if ((a == '2' && b != '2') || (a == '1' && b == '0')) {
                std::string t = s;
                std::swap(t[k], t[k + 1]);
                add(t, rates.u);
            }
            // left exchange at rate q: 12, 02, 01 -> swapped
            if ((b == '2' && a != '2') || (b == '1' && a == '0')) {
                std::string t = s;
                std::swap(t[k], t[k + 1]);
                add(t, rates.q);
            }
        }
        if (s[0] == '0') add('2' + s.substr(1), rates.alpha);
        if (s[0] == '2') add('0' + s.substr(1), rates.gamma);
        if (s[n - 1] == '2') add(s.substr(0, n - 1) + '0', rates.beta);
        if (s[n - 1] == '0') add(s.substr(0, n - 1) + '2', rates.delta);
        chain.P(i, i) += F(1) - total;
    }
    return chain;
}

/*
 * Exact stationary distribution: the unique solution of pi·P = pi,
 * sum(pi) = 1, by exact elimination on (P^T - I) with the normalization row
 * substituted in.  A reducible chain surfaces as SingularSystemError.
 */
template <Field F>
std::vector<F> stationary(const ChainSpec<F>& chain) {
    const int m = static_cast<int>(chain.states.size());
    DenseMatrix<F> a(m, m, F(0));
    std::vector<F> b(m, F(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a(i, j) = chain.P(j, i) - (i == j ? F(1) : F(0));
    for (int j = 0; j < m; ++j) a(m - 1, j) = F(1);
    b[m - 1] = F(1);
    std::vector<F> pi = solve_linear(std::move(a), std::move(b));
    // pi·P = pi must hold on the replaced row too; reducible chains can
    // produce a spurious "solution" otherwise.
    F check(0);
    for (int j = 0; j < m; ++j) check += pi[j] * chain.P(j, m - 1);
    if (!(check == pi[m - 1])) throw SingularSystemError("stationary: chain not irreducible");
    return pi;
}

/*
 * Matrix-product weights: weight(tau) = <W| prod_i M_{tau_i} |V> with
 * M_2 = D, M_1 = A, M_0 = E.  The sum of the weights over all states equals
 * <W|A^r|V>·Z_{N,r}(1); this is asserted, not assumed.
 */
template <Field F>
struct AnsatzWeights {
    std::vector<std::string> states;
    std::vector<F> weights;
    F total;
};

template <Field F>
AnsatzWeights<F> ansatz_weights(const ParamPoint<F>& p, const UswOperators<F>& ops, int n, int r) {
    AnsatzWeights<F> out;
    out.states = enumerate_states(n, r);
    out.total = F(0);
    for (const auto& s : out.states) {
        std::vector<BandOperator<F>> word;
        word.reserve(n);
        for (char ch : s)
            word.push_back(ch == '2' ? ops.D : (ch == '1' ? ops.A : ops.E));
        F w = eval_bra_word_ket(word, 0);
        out.total += w;
        out.weights.push_back(std::move(w));
    }
    F expected = bracket_A_power(ops, r) * Z_two_species(p, ops, n, r).eval(F(1));
    if (!(out.total == expected))
        throw std::logic_error("ansatz_weights: total differs from <W|A^r|V>·Z_{N,r}(1)");
    return out;
}

template <Field F>
AnsatzWeights<F> ansatz_weights(const ParamPoint<F>& p, int n, int r) {
    return ansatz_weights(p, build_operators(p), n, r);
}

/*
 * Seeded Monte Carlo realization.  Each row's exact cumulative probabilities
 * are quantized once to 64-bit thresholds (floor(cum·2^64), exact integer
 * arithmetic); a step draws one SplitMix64 word and walks the row's sparse
 * threshold list.  Same seed, same trajectory, bit for bit.
 *
 * counts holds every post-burn-in state; thinned_counts records every
 * thin-th one.  Consecutive chain states are correlated, so goodness-of-fit
 * tests whose null distribution assumes independent draws (Pearson's
 * chi-square) must run on the thinned counts.
 */
struct SimulationResult {
    std::vector<std::string> states;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> thinned_counts;
    std::uint64_t steps = 0, burnin = 0, seed = 0, thin = 1;
    int final_state = 0;
};

inline SimulationResult simulate(const ChainSpec<Rational>& chain, std::uint64_t steps,
                                 std::uint64_t seed, std::uint64_t burnin = 1000,
                                 std::uint64_t thin = 1) {
    if (thin == 0) throw std::invalid_argument("simulate: thin must be positive");
    const int m = static_cast<int>(chain.states.size());
    for (const Rational& rate :
         {chain.rates.alpha, chain.rates.beta, chain.rates.gamma, chain.rates.delta,
          chain.rates.q, chain.rates.u})
        if (rate < Rational(0) || rate > Rational(1))
            throw std::invalid_argument("simulate: rates must lie in [0,1]");

    std::vector<std::vector<std::pair<std::uint64_t, int>>> table(m);
    const BigInt two64 = BigInt(1) << 64;
    for (int i = 0; i < m; ++i) {
        Rational cum(0);
        for (int j = 0; j < m; ++j) {
            if (chain.P(i, j).is_zero()) continue;
            cum += chain.P(i, j);
            BigInt t = (cum.num() << 64) / cum.den();
            if (t >= two64) t = two64 - 1;
            table[i].emplace_back(t.convert_to<std::uint64_t>(), j);
        }
        if (!table[i].empty()) table[i].back().first = ~0ULL;  // row sums to exactly 1
    }

    SimulationResult res;
    res.states = chain.states;
    res.counts.assign(m, 0);
    res.thinned_counts.assign(m, 0);
    res.steps = steps;
    res.burnin = burnin;
    res.seed = seed;
    res.thin = thin;
    SplitMix64 rng(seed);
    int state = 0;
    for (std::uint64_t step = 0; step < burnin + steps; ++step) {
        std::uint64_t u = rng.next();
        for (const auto& [threshold, target] : table[state])
            if (u < threshold || threshold == ~0ULL) {
                state = target;
                break;
            }
        if (step >= burnin) {
            ++res.counts[state];
            if ((step - burnin) % thin == 0) ++res.thinned_counts[state];
        }
    }
    res.final_state = state;
    return res;
}

// Pearson statistic against exact expected probabilities.
inline double chi_square_statistic(const std::vector<std::uint64_t>& counts,
                                   const std::vector<Rational>& probs) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    double stat = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double expected = probs[i].to_double() * total;
        if (expected <= 0) throw std::invalid_argument("chi_square: zero expected count");
        double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

// Wilson-Hilferty approximation to the chi-square upper quantile.
inline double chi_square_critical(int dof, double z_upper = 2.3263478740408408 /* 99% */) {
    double k = dof;
    double t = 1.0 - 2.0 / (9.0 * k) + z_upper * std::sqrt(2.0 / (9.0 * k));
    return k * t * t * t;
}

inline double total_variation_distance(const std::vector<std::uint64_t>& counts,
                                       const std::vector<Rational>& probs) {
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    double tv = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        tv += std::abs(static_cast<double>(counts[i]) / total - probs[i].to_double());
    return tv / 2.0;
}

} // namespace asep

#endif // ASEP_CHAIN_HPP
