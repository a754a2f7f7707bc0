#ifndef ASEP_POLYNOMIAL_HPP
#define ASEP_POLYNOMIAL_HPP

#include <asep/rational.hpp>

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace asep {

/*
 * Dense univariate polynomial over an exact field, ascending coefficients.
 * Canonical form: no trailing zero coefficient; the zero polynomial has an
 * empty coefficient list.  Degrees stay small here, so dense wins.
 */
template <Field F>
class Poly {
public:
    Poly() = default;
    Poly(int c) { if (c != 0) coeffs_.push_back(F(c)); }
    Poly(F c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }
    Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly variable() { return Poly(std::vector<F>{F(0), F(1)}); }

    const std::vector<F>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return F(0);
        return coeffs_[k];
    }

    const F& leading() const {
        if (is_zero()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    F eval(const F& x) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Exact division: returns (quotient, remainder) with deg r < deg divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = *this;
        const F lead_inv = divisor.leading().inverse();
        const int dd = divisor.degree();
        std::vector<F> qc;
        if (r.degree() >= dd) qc.assign(r.degree() - dd + 1, F(0));
        while (!r.is_zero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            F c = r.leading() * lead_inv;
            qc[k] = c;
            for (int i = 0; i <= dd; ++i) r.coeffs_[k + i] -= c * divisor.coeffs_[i];
            r.trim();
        }
        q = Poly(std::move(qc));
        return {std::move(q), std::move(r)};
    }

    // Quotient when divisibility is guaranteed by theory; nonzero remainder
    // signals an internal inconsistency, not bad input.
    Poly divide_exact(const Poly& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero())
            throw std::logic_error("Poly: inexact division where theory guarantees divisibility");
        return q;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/*
 * Truncated power series in one variable y over a coefficient ring: all
 * coefficients up to y^order are exact, higher ones are dropped on multiply.
 * Used for [y^r] extraction; both operands of a binary op must carry the
 * same truncation order.
 */
template <typename R>
class Series {
public:
    Series() = default;
    Series(int order, R zero) : coeffs_(order + 1, zero) {}

    static Series constant(int order, R c, R zero) {
        Series s(order, std::move(zero));
        s.coeffs_[0] = std::move(c);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& operator[](int k) const { return coeffs_.at(k); }
    R& operator[](int k) { return coeffs_.at(k); }

    Series& operator+=(const Series& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    friend Series operator*(const Series& a, const Series& b) {
        a.check(b);
        Series out = a;
        for (auto& c : out.coeffs_) c = c - c;  // ring zero of matching shape
        for (int i = 0; i <= a.order(); ++i)
            for (int j = 0; i + j <= a.order(); ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    void check(const Series& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::logic_error("Series: mismatched truncation orders");
    }

    std::vector<R> coeffs_;
};

// Exact division dispatch used by determinant ratios: plain field division
// for scalars, zero-remainder polynomial division for Poly entries.
template <Field F>
F exact_div(const F& num, const F& den) {
    if (den.is_zero()) throw std::domain_error("exact_div: zero denominator");
    return num * den.inverse();
}

template <Field F>
Poly<F> exact_div(const Poly<F>& num, const Poly<F>& den) {
    return num.divide_exact(den);
}

} // namespace asep

#endif // ASEP_POLYNOMIAL_HPP
