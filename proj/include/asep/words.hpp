#ifndef ASEP_WORDS_HPP
#define ASEP_WORDS_HPP

#include <asep/moments.hpp>
#include <asep/params.hpp>
#include <asep/usw.hpp>

#include <map>
#include <string>
#include <vector>

namespace asep {

inline void require_word(const std::string& w, const std::string& alphabet) {
    for (char ch : w)
        if (alphabet.find(ch) == std::string::npos)
            throw std::invalid_argument("word contains letter outside {" + alphabet + "}: " + w);
}

// <W| X |V^r> for a word over {D,E,A} (capitals) or {d,e} (band matrices).
template <Field F>
F word_bracket(const UswOperators<F>& ops, const std::string& word, int r) {
    std::vector<BandOperator<F>> factors;
    factors.reserve(word.size());
    for (char ch : word) {
        switch (ch) {
            case 'D': factors.push_back(ops.D); break;
            case 'E': factors.push_back(ops.E); break;
            case 'A': factors.push_back(ops.A); break;
            case 'd': factors.push_back(ops.d); break;
            case 'e': factors.push_back(ops.e); break;
            default: throw std::invalid_argument("word_bracket: unknown letter");
        }
    }
    return eval_bra_word_ket(factors, r);
}

/*
 * A word of S_r(X): the base word X over {D,E} with r positions replaced by
 * A.  Positions are 1-based as in the inversion statistic; D(Z)/E(Z) are the
 * replaced positions that held D resp. E.
 */
struct Replacement {
    std::string base;
    std::vector<int> positions;       // 1-based, increasing
    std::vector<int> d_positions, e_positions;

    std::string word() const {
        std::string w = base;
        for (int pos : positions) w[pos - 1] = 'A';
        return w;
    }
};

inline std::vector<Replacement> s_r(const std::string& x, int r) {
    require_word(x, "DE");
    const int n = static_cast<int>(x.size());
    std::vector<Replacement> out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(idx.size()) == r) {
            Replacement z{x, idx, {}, {}};
            for (int pos : idx)
                (x[pos - 1] == 'D' ? z.d_positions : z.e_positions).push_back(pos);
            out.push_back(std::move(z));
            return;
        }
        for (int pos = from; pos <= n; ++pos) {
            idx.push_back(pos);
            self(self, pos + 1);
            idx.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// inv_E(Z) = sum over j in E(Z) of #{ i in D(Z) u E(Z) : i < j }.
inline int inv_E(const Replacement& z) {
    int total = 0;
    for (int j : z.e_positions)
        for (int i : z.positions)
            if (i < j) ++total;
    return total;
}

/*
 * Normal form of a word over {D,E}: rewrite the leftmost DE by
 * DE -> q·ED + D + E until no DE remains; the result is a linear combination
 * of words E^l D^m.  The fixed leftmost strategy makes output deterministic.
 */
template <Field F>
std::map<std::string, F> normal_form(const std::string& x, const F& q) {
    require_word(x, "DE");
    std::map<std::string, F> result;
    std::vector<std::pair<std::string, F>> work{{x, F(1)}};
    while (!work.empty()) {
        auto [w, coeff] = work.back();
        work.pop_back();
        auto pos = w.find("DE");
        if (pos == std::string::npos) {
            auto [it, inserted] = result.emplace(w, coeff);
            if (!inserted) it->second += coeff;
            continue;
        }
        std::string swapped = w;
        swapped[pos] = 'E';
        swapped[pos + 1] = 'D';
        work.emplace_back(swapped, coeff * q);
        work.emplace_back(w.substr(0, pos) + 'D' + w.substr(pos + 2), coeff);
        work.emplace_back(w.substr(0, pos) + 'E' + w.substr(pos + 2), coeff);
    }
    for (auto it = result.begin(); it != result.end();)
        it = it->second == F(0) ? result.erase(it) : std::next(it);
    return result;
}

template <typename F>
struct ScalarCheck {
    bool holds;
    F lhs, rhs;
};

/*
 * <W|X|V^r> · alpha^r (1-q)^r  =
 *   sum over Z in S_r(X) of q^{inv_E(Z)} alpha^{|D(Z)|} gamma^{|E(Z)|}
 *       <W|Z|V> / <W|A^r|V>.
 */
template <Field F>
ScalarCheck<F> verify_refinement(const ParamPoint<F>& p, const UswOperators<F>& ops,
                                 const std::string& x, int r) {
    require_word(x, "DE");
    F lhs = word_bracket(ops, x, r) * rho_tilde_r(p, r);
    F denom = bracket_A_power(ops, r);
    if (denom.is_zero()) throw DegenerateParameterError("<W|A^r|V>");
    F denom_inv = denom.inverse();
    F rhs(0);
    for (const auto& z : s_r(x, r)) {
        F term = ring_pow(p.q, inv_E(z)) *
                 ring_pow(p.alpha, static_cast<int>(z.d_positions.size())) *
                 ring_pow(p.gamma, static_cast<int>(z.e_positions.size())) *
                 word_bracket(ops, z.word(), 0) * denom_inv;
        rhs += term;
    }
    return {lhs == rhs, lhs, rhs};
}

// <W|D^N|V^r> · alpha^r (1-q)^r = [y^r] <W|(D + y·alpha·A)^N|V> / <W|A^r|V>.
template <Field F>
ScalarCheck<F> verify_finalcheck(const ParamPoint<F>& p, const UswOperators<F>& ops, int n, int r) {
    F lhs = word_bracket(ops, std::string(n, 'D'), r) * rho_tilde_r(p, r);
    F denom = bracket_A_power(ops, r);
    if (denom.is_zero()) throw DegenerateParameterError("<W|A^r|V>");
    using S = Series<F>;
    const F zero(0);
    BandOperator<F> D = ops.D, A = ops.A;
    F alpha = p.alpha;
    auto gen = [D, A, alpha, r, zero](int i, int j) {
        S s(r, zero);
        s[0] = D.entry(i, j);
        if (r >= 1) s[1] = alpha * A.entry(i, j);
        return s;
    };
    BandOperator<S> op(2, 2, gen, S(r, zero));
    std::vector<BandOperator<S>> word(n, op);
    S bracket = eval_bra_word_ket(std::span<const BandOperator<S>>(word), 0,
                                  S::constant(r, F(1), zero));
    F rhs = bracket[r] * denom.inverse();
    return {lhs == rhs, lhs, rhs};
}

/*
 * Aggregate of the refinement over all X in {D,E}^N with xi^{|X|_D} weights;
 * equivalent to the two-species correspondence for the bracket at |V^r>
 * after multiplying through by prod(alpha·xi + q^i·gamma) = alpha^r·k_r(xi):
 *
 *   <W|(xi D+E)^N|V^r> · rho~_r = Z_{N,r}(xi) · prod_{i<r}(alpha·xi + q^i·gamma).
 */
template <Field F>
struct PolyCheck {
    bool holds;
    Poly<F> lhs, rhs;
};

template <Field F>
PolyCheck<F> verify_refinement_sum(const ParamPoint<F>& p, const UswOperators<F>& ops, int n,
                                   int r) {
    Poly<F> bracket = eval_bra_power_ket(fugacity_operator(ops), n, r);
    Poly<F> lhs = bracket.scaled(rho_tilde_r(p, r));
    Poly<F> factor(1);
    F qp(1);
    for (int i = 0; i < r; ++i) {
        factor *= Poly<F>(std::vector<F>{qp * p.gamma, p.alpha});
        qp = qp * p.q;
    }
    Poly<F> rhs = Z_two_species(p, ops, n, r) * factor;
    return {lhs == rhs, lhs, rhs};
}

} // namespace asep

#endif // ASEP_WORDS_HPP
