#ifndef ASEP_MULTIPOLY_HPP
#define ASEP_MULTIPOLY_HPP

#include <asep/rational.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace asep {

/*
 * Sparse multivariate polynomial in V variables over an exact field.  Small
 * term counts only (symbolic identity checks, positivity certificates), so a
 * map keyed by exponent vector is plenty.
 */
template <Field F, int V>
class MultiPoly {
public:
    using Exponents = std::array<int, V>;

    MultiPoly() = default;
    MultiPoly(int c) {
        if (c != 0) terms_[Exponents{}] = F(c);
    }
    explicit MultiPoly(F c) {
        if (!c.is_zero()) terms_[Exponents{}] = std::move(c);
    }

    static MultiPoly variable(int i) {
        MultiPoly p;
        Exponents e{};
        e[i] = 1;
        p.terms_[e] = F(1);
        return p;
    }

    const std::map<Exponents, F>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    F coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < V; ++i) e[i] = ea[i] + eb[i];
                F c = ca * cb;
                auto [it, inserted] = out.terms_.emplace(e, c);
                if (!inserted) {
                    it->second += c;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const F& c) const {
        MultiPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    F eval(const std::array<F, V>& x) const {
        F acc(0);
        for (const auto& [e, c] : terms_) {
            F term = c;
            for (int i = 0; i < V; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * x[i];
            acc += term;
        }
        return acc;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [e, c] : terms_)
            if (c < F(0)) return false;
        return true;
    }

    std::string str(const std::array<std::string, V>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (int i = 0; i < V; ++i) {
                if (e[i] == 0) continue;
                s += "·" + names[i];
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }

private:
    std::map<Exponents, F> terms_;
};

} // namespace asep

#endif // ASEP_MULTIPOLY_HPP
