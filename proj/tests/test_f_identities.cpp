#include <asep/f_identities.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace asep;
using P = Poly<Rational>;

namespace {

ParamPoint<Rational> sample_point() {
    return make_param_point<Rational>(Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(3)),
                                      Rational(BigInt(-1), BigInt(5)), Rational(BigInt(1), BigInt(7)),
                                      Rational(BigInt(1), BigInt(4)), 24);
}

} // namespace

TEST_CASE("A_m and B_m sums") {
    auto p = sample_point();
    CHECK(B_poly(p, 0) == Rational(1));
    CHECK(A_poly(p, 0) == Rational(1));
    CHECK(B_poly(p, 1) == p.b + p.d);
    CHECK(A_poly(p, 1) == p.a + p.c);
    // B_2 = b^2 + (1+q) b d + d^2
    CHECK(B_poly(p, 2) == p.b * p.b + (Rational(1) + p.q) * p.b * p.d + p.d * p.d);
}

TEST_CASE("F polynomials") {
    auto p = sample_point();
    P y = P::variable();
    CHECK(F_recurrence(p, 0) == P(1));
    CHECK(F_recurrence(p, -2).is_zero());
    CHECK(F_recurrence(p, 1) == P(p.b + p.d) - y.scaled(p.a + p.c));
    // F_2 by one recurrence step
    P f2 = (P(p.b + p.d) - y.scaled((p.a + p.c) * p.q)) * F_recurrence(p, 1) +
           (P(p.b * p.d) - (y * y).scaled(p.a * p.c)).scaled(p.q - Rational(1));
    CHECK(F_recurrence(p, 2) == f2);
    for (int m = 0; m <= 4; ++m) CHECK(F_recurrence(p, m).degree() <= m);
}

TEST_CASE("explicit F equals the recurrence") {
    SplitMix64 rng(109);
    for (int iter = 0; iter < 3; ++iter) {
        auto p = random_param_point(rng, 12, /*nonzero_q=*/true);
        for (int m = 0; m <= 8; ++m) {
            INFO("m=" << m);
            CHECK(F_explicit(p, m) == F_recurrence(p, m));
        }
    }
}

TEST_CASE("x coefficients") {
    Rational q(BigInt(2), BigInt(5));
    CHECK(x_coeff(4, 0, 0, 0, q) == Rational(1));
    CHECK(x_coeff(4, 2, 1, 3, q) == Rational(0));   // j > n
    CHECK(x_coeff(4, 2, 3, 1, q) == Rational(0));   // i > m - n
    CHECK(x_coeff(3, -1, 0, 0, q) == Rational(0));

    // against the full symbolic expansion of X_{m,n}
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= m; ++n) {
            auto X = X_mn_symbolic(m, n, q);
            for (int i = 0; i <= m - n; ++i)
                for (int j = 0; j <= n; ++j) {
                    // coefficient of a^j b^{n+i} c^{n-j} d^{m-i}
                    MultiPoly<Rational, 4>::Exponents e{j, n + i, n - j, m - i};
                    INFO("m=" << m << " n=" << n << " i=" << i << " j=" << j);
                    CHECK(X.coeff(e) == x_coeff(m, n, i, j, q));
                }
        }
}

TEST_CASE("border scalar R_r") {
    SECTION("vanishes when every parameter is zero") {
        auto p0 = make_param_point<Rational>(Rational(0), Rational(0), Rational(0), Rational(0),
                                             Rational(BigInt(1), BigInt(3)), 8);
        for (int r = 1; r <= 4; ++r) CHECK(R_r_scalar(p0, r) == Rational(0));
    }
    SECTION("explicit r=1 value") {
        auto p = sample_point();
        Rational abcd = p.a * p.b * p.c * p.d;
        Rational expected = (p.q * (p.b + p.d) - (p.b + p.d) * abcd +
                             p.b * p.d * (p.a + p.c) * (Rational(1) - p.q)) /
                            (Rational(1) - abcd);
        CHECK(R_r_scalar(p, 1) == expected);
    }
    SECTION("r=0 requires nonzero q") {
        auto p0 = make_param_point<Rational>(Rational(0), Rational(0), Rational(0), Rational(0),
                                             Rational(0), 8);
        CHECK_THROWS_AS(R_r_scalar(p0, 0), std::domain_error);
    }
}

TEST_CASE("section 7 bundle at random points") {
    SplitMix64 rng(113);
    for (int iter = 0; iter < 2; ++iter) {
        auto p = random_param_point(rng, 24, /*nonzero_q=*/true, /*nonzero_abcd=*/true);
        Section7Bounds bounds;
        bounds.max_m = 5;
        bounds.max_r = 3;
        bounds.max_n = 6;
        bounds.max_m_coeff = 4;
        auto rep = verify_section7(p, bounds);
        if (!rep.ok())
            for (const auto& r : rep.results)
                if (!r.holds) {
                    INFO(r.identity << " at " << r.indices << ": " << r.lhs << " vs " << r.rhs);
                    CHECK(r.holds);
                }
        CHECK(rep.ok());
    }
}

TEST_CASE("section 7 rejects q = 0") {
    auto p0 = make_param_point<Rational>(Rational(0), Rational(0), Rational(0), Rational(0),
                                         Rational(0), 8);
    CHECK_THROWS_AS(verify_section7(p0), std::domain_error);
}
