#ifndef ASEP_PARAMS_HPP
#define ASEP_PARAMS_HPP

#include <asep/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asep {

// A parameter denominator vanished; carries which one, for diagnostics and
// the CLI exit code.
struct DegenerateParameterError : std::runtime_error {
    explicit DegenerateParameterError(const std::string& denominator)
        : std::runtime_error("degenerate parameters: " + denominator + " = 0"),
          vanished(denominator) {}
    std::string vanished;
};

/*
 * Parameters (a, b, c, d, q) of the tridiagonal representation together with
 * the derived open-boundary rates and a genericity horizon H.  Construction
 * certifies, up front, every denominator the representation can touch at row
 * indices <= H:
 *
 *   q != 1,  1+ac+a+c != 0,  1+bd+b+d != 0,
 *   1 - q^n ac != 0 and 1 - q^n bd != 0 for n <= H,
 *   1 - q^n abcd != 0 for n <= 2H+2.
 *
 * Failures surface as DegenerateParameterError before any entry is built.
 */
template <Field F>
struct ParamPoint {
    F a, b, c, d, q;
    F alpha, beta, gamma, delta;
    int horizon = 0;

    void require_horizon(int n) const {
        if (n > horizon)
            throw std::logic_error("ParamPoint: index " + std::to_string(n) +
                                   " beyond certified horizon " + std::to_string(horizon));
    }
};

// The rates of the open-boundary process expressed rationally in (a,b,c,d,q).
template <Field F>
void derive_open_boundary_rates(ParamPoint<F>& p) {
    const F one(1);
    F den_ac = one + p.a * p.c + p.a + p.c;
    F den_bd = one + p.b * p.d + p.b + p.d;
    if (den_ac.is_zero()) throw DegenerateParameterError("1+ac+a+c");
    if (den_bd.is_zero()) throw DegenerateParameterError("1+bd+b+d");
    F one_q = one - p.q;
    p.alpha = one_q * den_ac.inverse();
    p.gamma = -(one_q * p.a * p.c) * den_ac.inverse();
    p.beta = one_q * den_bd.inverse();
    p.delta = -(one_q * p.b * p.d) * den_bd.inverse();
}

template <Field F>
ParamPoint<F> make_param_point(F a, F b, F c, F d, F q, int horizon) {
    ParamPoint<F> p;
    p.a = std::move(a);
    p.b = std::move(b);
    p.c = std::move(c);
    p.d = std::move(d);
    p.q = std::move(q);
    p.horizon = horizon;
    const F one(1);
    if (p.q == one) throw DegenerateParameterError("1-q");
    derive_open_boundary_rates(p);
    F ac = p.a * p.c, bd = p.b * p.d, abcd = ac * bd;
    F qp(1);
    for (int n = 0; n <= horizon; ++n) {
        if ((one - qp * ac).is_zero()) throw DegenerateParameterError("1-q^" + std::to_string(n) + "·ac");
        if ((one - qp * bd).is_zero()) throw DegenerateParameterError("1-q^" + std::to_string(n) + "·bd");
        qp = qp * p.q;
    }
    qp = F(1);
    for (int n = 0; n <= 2 * horizon + 2; ++n) {
        if ((one - qp * abcd).is_zero())
            throw DegenerateParameterError("1-q^" + std::to_string(n) + "·abcd");
        qp = qp * p.q;
    }
    return p;
}

// Verifies that t solves the boundary quadratic alpha·t² − (1−q−alpha+gamma)·t − gamma = 0,
// i.e. that t is one of the two roots the inverse change of variables produces.
template <Field F>
bool satisfies_left_boundary_quadratic(const ParamPoint<F>& p, const F& t) {
    F lhs = p.alpha * t * t - (F(1) - p.q - p.alpha + p.gamma) * t - p.gamma;
    return lhs == F(0);
}

template <Field F>
bool satisfies_right_boundary_quadratic(const ParamPoint<F>& p, const F& t) {
    F lhs = p.beta * t * t - (F(1) - p.q - p.beta + p.delta) * t - p.delta;
    return lhs == F(0);
}

/*
 * SplitMix64: tiny, well-known 64-bit generator (Steele–Lea–Flood mixing).
 * One uniform 64-bit word per call; trajectories are reproducible from the
 * seed on any platform.
 */
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform integer in [lo, hi] by rejection-free modulo (spans are tiny).
    long long next_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Small-denominator rational in (-1, 1).
inline Rational random_small_rational(SplitMix64& rng, bool nonzero = false) {
    for (;;) {
        long long den = rng.next_in(2, 12);
        long long num = rng.next_in(-den + 1, den - 1);
        if (nonzero && num == 0) continue;
        return Rational(BigInt(num), BigInt(den));
    }
}

/*
 * Seeded generic rational parameter point.  Everything drawn from (-1,1)
 * keeps every 1 - q^n·(ac|bd|abcd) denominator away from zero, so rejection
 * only ever fires on the explicit certificates.
 */
inline ParamPoint<Rational> random_param_point(SplitMix64& rng, int horizon,
                                               bool nonzero_q = true,
                                               bool nonzero_abcd = false) {
    for (;;) {
        Rational a = random_small_rational(rng, nonzero_abcd);
        Rational b = random_small_rational(rng, nonzero_abcd);
        Rational c = random_small_rational(rng, nonzero_abcd);
        Rational d = random_small_rational(rng, nonzero_abcd);
        Rational q = random_small_rational(rng, nonzero_q);
        try {
            return make_param_point(a, b, c, d, q, horizon);
        } catch (const DegenerateParameterError&) {
            continue;
        }
    }
}

// Gaussian-rational point (a·i, −b·i, c·i, −d·i, q) from a real rational one;
// this is the parameter map of the moment correspondence.
inline ParamPoint<GaussianRational> to_gaussian_point(const ParamPoint<Rational>& p) {
    GaussianRational i = GaussianRational::i();
    return make_param_point<GaussianRational>(
        GaussianRational(p.a) * i, -(GaussianRational(p.b) * i),
        GaussianRational(p.c) * i, -(GaussianRational(p.d) * i),
        GaussianRational(p.q), p.horizon);
}

} // namespace asep

#endif // ASEP_PARAMS_HPP
