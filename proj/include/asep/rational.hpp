#ifndef ASEP_RATIONAL_HPP
#define ASEP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asep {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Arbitrary-precision rational scalar.  Always stored in lowest terms with a
 * positive denominator; every operation is exact.  The backing type is
 * boost::multiprecision::cpp_rational, which maintains the canonical form.
 */
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    Rational(BigInt v) : v_(std::move(v)) {}
    explicit Rational(Backend v) : v_(std::move(v)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = Backend(std::move(num), std::move(den));
    }

    const BigInt num() const { return numerator(v_); }
    const BigInt den() const { return denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Backend(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(Backend(1) / v_);
    }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.convert_to<double>(); }

    // Canonical text form: "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        std::string s = num().str();
        if (den() != 1) s += "/" + den().str();
        return s;
    }

    // Accepts "p" or "p/q";q may not be zero.  Whitespace is not tolerated.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)), BigInt(1));
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            return Rational(std::move(num), std::move(den));
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
        }
    }

private:
    Backend v_;
};

inline Rational pow(const Rational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Rational r(1), b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/*
 * Gaussian rational a + b·i with i² = −1; field over Rational.
 */
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_; im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_; im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussianRational inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
        return {re_ / n, -im_ / n};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        return re_.str() + (im_.sign() < 0 ? "" : "+") + im_.str() + "i";
    }

private:
    Rational re_, im_;
};

inline GaussianRational pow(const GaussianRational& base, long long e) {
    if (e < 0) return pow(base.inverse(), -e);
    GaussianRational r(1), b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

// Commutative ring with exact equality and 0/1 constructible from int.
template <typename R>
concept Ring = requires(R x, R y) {
    { R(0) };
    { R(1) };
    { x + y } -> std::convertible_to<R>;
    { x - y } -> std::convertible_to<R>;
    { x * y } -> std::convertible_to<R>;
    { -x } -> std::convertible_to<R>;
    { x == y } -> std::convertible_to<bool>;
};

// Ring with exact multiplicative inverses of nonzero elements.
template <typename F>
concept Field = Ring<F> && requires(F x) {
    { x.inverse() } -> std::convertible_to<F>;
    { x.is_zero() } -> std::convertible_to<bool>;
};

template <Ring R>
R ring_pow(R base, long long e) {
    R r(1);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

} // namespace asep

#endif // ASEP_RATIONAL_HPP
