// Acceptance suite: one line per criterion, exact checks at desk scale.
// Exit code = number of failed criteria.

#include <asep/chain.hpp>
#include <asep/f_identities.hpp>
#include <asep/moments.hpp>
#include <asep/motzkin.hpp>
#include <asep/q1.hpp>
#include <asep/usw.hpp>
#include <asep/words.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace asep;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void info(const std::string& text) {
    std::printf("        note: %s\n", text.c_str());
    std::fflush(stdout);
}

std::vector<ParamPoint<Rational>> seeded_points(int count, std::uint64_t seed, int horizon,
                                                bool nonzero_q = true, bool nonzero_abcd = false) {
    SplitMix64 rng(seed);
    std::vector<ParamPoint<Rational>> pts;
    while (static_cast<int>(pts.size()) < count)
        pts.push_back(random_param_point(rng, horizon, nonzero_q, nonzero_abcd));
    return pts;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1: Matrix Ansatz relations -------------------------------
void criterion_relations() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& p : seeded_points(5, 101, 40)) {
        auto rep = check_ansatz_relations(p, 10);
        if (!rep.ok()) {
            ok = false;
            detail = rep.failures.front().relation + " fails at entry (" +
                     std::to_string(rep.failures.front().i) + "," +
                     std::to_string(rep.failures.front().j) + ")";
            break;
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 10.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s over the 10s budget";
    }
    report(1, "Matrix Ansatz relations, interior dim 10, 5 points", ok, detail);
}

// --- criterion 2: main theorem ------------------------------------------
void criterion_main_theorem() {
    auto t0 = std::chrono::steady_clock::now();
    bool stated_ok = true, factor_free_ok = true, edge_ok = true;
    int cases = 0;
    for (const auto& p : seeded_points(3, 202, 40)) {
        auto ops = build_operators(p);
        for (int n = 2; n <= 6; ++n)
            for (int r = 1; r < n; ++r) {
                auto chk = verify_main_theorem(p, ops, n, r);
                ++cases;
                stated_ok = stated_ok && chk.printed_holds;
                factor_free_ok = factor_free_ok && chk.factor_free_holds;
            }
        // r = N edge: report only; expected discrepancy factor (1-q)^N on
        // the stated form, exact agreement on the factor-free form.
        for (int n = 1; n <= 6; ++n) {
            auto chk = verify_main_theorem(p, ops, n, n);
            edge_ok = edge_ok && chk.factor_free_holds &&
                      chk.z_poly == chk.k_poly &&
                      chk.k_poly.scaled(ring_pow(Rational(1) - p.q, n)) != chk.z_poly;
        }
    }
    double dt = seconds_since(t0);
    report(2, "main theorem as stated: K·(1-q)^r = Z_{N,r}, 1<=r<N<=6, 3 points",
           stated_ok && dt < 60.0,
           "fails at every generic point; the printed (1-q)^r factor traces to the "
           "corollary's k_r slip");
    info(std::string("factor-free form K = Z_{N,r} holds on all ") + std::to_string(cases) +
         " cases: " + (factor_free_ok ? "yes" : "NO"));
    info(std::string("r = N edge reported, not gated: discrepancy factor (1-q)^N on the stated "
                     "form, exact equality factor-free: ") +
         (edge_ok ? "confirmed" : "NOT confirmed"));
    info("runtime " + std::to_string(dt) + "s");
}

// --- criterion 3: stationary cross-validation ---------------------------
void criterion_stationary() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& p : seeded_points(3, 303, 40)) {
        auto ops = build_operators(p);
        ChainRates<Rational> rates{p.alpha, p.beta, p.gamma, p.delta, p.q, Rational(1)};
        for (int n = 1; n <= 5 && ok; ++n)
            for (int r = 0; r <= n && ok; ++r) {
                auto chain = build_chain(n, r, rates);
                auto pi = stationary(chain);
                auto w = ansatz_weights(p, ops, n, r);
                for (std::size_t k = 0; k < pi.size(); ++k)
                    if (!(pi[k] * w.total == w.weights[k])) {
                        ok = false;
                        detail = "mismatch at N=" + std::to_string(n) + " r=" + std::to_string(r) +
                                 " state " + chain.states[k];
                        break;
                    }
            }
        if (!ok) break;
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 60.0) {
        ok = false;
        detail = "runtime " + std::to_string(dt) + "s over the 60s budget";
    }
    report(3, "ansatz weights == exact stationary law, N<=5, all r, 3 points", ok, detail);
    info("runtime " + std::to_string(dt) + "s");
}

// --- criterion 4: Motzkin oracle ----------------------------------------
void criterion_motzkin() {
    bool ok = true;
    std::string detail;
    SplitMix64 rng(404);

    // every band-(1,1) operator the suite touches: random tridiagonals,
    // xi·D+E at random points, and the q=1 matrix
    std::vector<BandOperator<Rational>> scalar_ops;
    for (int k = 0; k < 2; ++k) {
        auto table = std::make_shared<std::vector<std::array<Rational, 3>>>();
        for (int n = 0; n < 24; ++n)
            table->push_back({random_small_rational(rng, true), random_small_rational(rng, true),
                              random_small_rational(rng, true)});
        scalar_ops.push_back(band_from_diagonals<Rational>(
            [table](int n) { return (*table)[n][0]; }, [table](int n) { return (*table)[n][1]; },
            [table](int n) { return (*table)[n][2]; }, Rational(0)));
    }
    scalar_ops.push_back(c_matrix_q1(make_q1_params(Rational(BigInt(1), BigInt(2)),
                                                    Rational(BigInt(1), BigInt(3)),
                                                    Rational(BigInt(1), BigInt(8)),
                                                    Rational(BigInt(1), BigInt(9)))));
    for (const auto& w : scalar_ops)
        for (int n = 0; n <= 8 && ok; ++n)
            for (int r = 0; r <= n && ok; ++r) {
                std::vector<BandOperator<Rational>> word(n, w);
                if (!(path_gf(w, n, r) == eval_bra_word_ket(word, r))) {
                    ok = false;
                    detail = "path gf != matrix power at N=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                }
            }
    // the xi-weighted operator, as polynomials
    auto p = random_param_point(rng, 40);
    auto C = fugacity_operator(build_operators(p));
    for (int n = 0; n <= 8 && ok; ++n)
        for (int r = 0; r <= n && ok; ++r) {
            std::vector<BandOperator<Poly<Rational>>> word(n, C);
            if (!(path_gf(C, n, r) == eval_bra_word_ket(word, r))) {
                ok = false;
                detail = "fugacity path gf mismatch at N=" + std::to_string(n);
            }
        }

    // determinant identity with k_r = prod c_{i,i+1}
    for (const auto& w : scalar_ops)
        for (int n = 0; n <= 6 && ok; ++n)
            for (int r = 0; r <= n && ok; ++r)
                if (!verify_det_motzkin(w, n, r).holds) {
                    ok = false;
                    detail = "det identity fails at N=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                }

    // vertex-disjoint collections against determinants
    for (const auto& w : scalar_ops)
        for (int r = 0; r <= 3 && ok; ++r) {
            KmlgvConfig den{KmlgvConfig::Kind::Denominator, 0, r};
            auto chk = verify_kmlgv(w, den);
            if (!chk.holds || !chk.only_identity_contributes) {
                ok = false;
                detail = "denominator network fails at r=" + std::to_string(r);
            }
            for (int n = r; n <= 5 && ok; ++n) {
                KmlgvConfig num{KmlgvConfig::Kind::Numerator, n, r};
                auto chk2 = verify_kmlgv(w, num);
                if (!chk2.holds || !chk2.only_identity_contributes) {
                    ok = false;
                    detail = "numerator network fails at N=" + std::to_string(n) +
                             " r=" + std::to_string(r);
                }
            }
        }
    report(4, "Motzkin oracle: paths == matrix powers, det identity, network counts", ok, detail);
}

// --- criterion 5: Jacobi-Trudi ------------------------------------------
void criterion_jacobi_trudi() {
    bool ok = true;
    std::string detail;
    for (const auto& p : seeded_points(3, 505, 40)) {
        auto ops = build_operators(p);
        for (const auto& lam : partitions_in_box(3, 4)) {
            if (!(jacobi_trudi_K(p, ops, lam) == koornwinder_K(p, ops, lam))) {
                ok = false;
                detail = "mismatch at lambda = " + lam.str();
                break;
            }
        }
        if (!ok) break;
    }
    report(5, "Jacobi-Trudi determinant == Hankel definition, box 3x4, 3 points", ok, detail);
}

// --- criterion 6: refinement --------------------------------------------
void criterion_refinement() {
    bool ok = true;
    std::string detail;
    SplitMix64 rng(606);
    auto p = random_param_point(rng, 40);
    auto ops = build_operators(p);

    std::vector<std::string> words{""};
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == n - 1) {
                next.push_back(w + 'D');
                next.push_back(w + 'E');
            }
        for (const auto& w : next) {
            for (int r = 0; r <= n && ok; ++r) {
                auto chk = verify_refinement(p, ops, w, r);
                if (!chk.holds) {
                    ok = false;
                    detail = "refinement fails for " + w + " r=" + std::to_string(r);
                }
            }
        }
        words = std::move(next);
    }
    for (int n : {6, 7})
        for (int k = 0; k < 10 && ok; ++k) {
            std::string w;
            for (int i = 0; i < n; ++i) w += (rng.next() & 1) ? 'D' : 'E';
            int r = static_cast<int>(rng.next_in(0, n));
            auto chk = verify_refinement(p, ops, w, r);
            if (!chk.holds) {
                ok = false;
                detail = "refinement fails for random word " + w;
            }
        }
    for (int n = 0; n <= 6 && ok; ++n)
        for (int r = 0; r <= n && ok; ++r) {
            auto chk = verify_finalcheck(p, ops, n, r);
            if (!chk.holds) {
                ok = false;
                detail = "D-word extraction fails at N=" + std::to_string(n) +
                         " r=" + std::to_string(r);
            }
        }
    report(6, "refinement for all words N<=5 and 20 random words N=6,7; D-word form N<=6", ok,
           detail);
}

// --- criterion 7: section-7 machinery ------------------------------------
void criterion_section7() {
    bool ok = true;
    std::string detail;
    for (const auto& p : seeded_points(2, 707, 40, true, true)) {
        Section7Bounds bounds;
        bounds.max_m = 6;
        bounds.max_r = 4;
        bounds.max_n = 8;
        bounds.max_m_coeff = 5;
        auto rep = verify_section7(p, bounds);
        if (!rep.ok()) {
            ok = false;
            for (const auto& r : rep.results)
                if (!r.holds) {
                    detail = r.identity + " at " + r.indices;
                    break;
                }
            break;
        }
    }
    report(7, "F recurrences, closed forms, q-binomial and coefficient identities", ok, detail);
}

// --- criterion 8: Askey-Wilson bridge ------------------------------------
void criterion_aw_bridge() {
    bool ok = true;
    std::string detail;
    for (const auto& p : seeded_points(2, 808, 40)) {
        auto g = to_gaussian_point(p);
        auto gops = build_operators(g);
        auto zg = z_sequence(gops, 6);
        GaussianRational theta = (GaussianRational(1) - GaussianRational(p.q)) /
                                 (GaussianRational(2) * GaussianRational::i());
        for (int n = 0; n <= 6 && ok; ++n)
            if (!(GaussianRational(aw_moment(p, n)) ==
                  pow(theta, n) * zg[n].eval(GaussianRational(-1)))) {
                ok = false;
                detail = "mu_N mismatch at N=" + std::to_string(n);
            }
        for (const auto& lam :
             {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}),
              Partition({3}), Partition({4}), Partition({2, 2}), Partition({1, 1, 1}),
              Partition({3, 1}), Partition({2, 1, 1})}) {
            if (!ok) break;
            GaussianRational lhs(koornwinder_M(p, lam));
            GaussianRational rhs = pow(theta, lam.weight()) *
                                   koornwinder_K(g, gops, lam).eval(GaussianRational(-1));
            if (!(lhs == rhs)) {
                ok = false;
                detail = "M_lambda mismatch at lambda = " + lam.str();
            }
        }
        if (!ok) break;
    }
    report(8, "moment bridge over Q(i): mu_N and M_lambda vs xi = -1 values", ok, detail);
}

// --- criterion 9: q = xi = 1 ---------------------------------------------
void criterion_q1() {
    bool ok = true;
    std::string detail;
    SplitMix64 rng(909);
    for (int iter = 0; iter < 3 && ok; ++iter) {
        Q1Params p = [&] {
            for (;;) {
                try {
                    return make_q1_params(random_small_rational(rng, true).abs(),
                                          random_small_rational(rng, true).abs(),
                                          random_small_rational(rng).abs(),
                                          random_small_rational(rng).abs());
                } catch (const DegenerateParameterError&) {
                }
            }
        }();
        auto rep = verify_q1_recurrences(p);
        if (!rep.ok()) {
            ok = false;
            for (const auto& r : rep.results)
                if (!r.holds) {
                    detail = r.identity + " at " + r.indices;
                    break;
                }
        }
        for (const auto& lam : partitions_in_box(3, 3)) {
            if (!ok) break;
            auto res = positivity_q1(p, lam);
            if (!res.all_nonnegative || !res.matches_determinant) {
                ok = false;
                detail = "positivity fails at lambda = " + lam.str();
            }
        }
    }
    report(9, "q=xi=1: hook formula, multiplicative lemmas (S^m restored), positivity", ok,
           detail);
    info("column recurrence verified with the S^m factor restored; as printed it drops S^m");
}

// --- criterion 10: Monte Carlo -------------------------------------------
void criterion_monte_carlo() {
    auto t0 = std::chrono::steady_clock::now();
    ChainRates<Rational> rates{Rational(BigInt(1), BigInt(2)), Rational(BigInt(2), BigInt(5)),
                               Rational(BigInt(1), BigInt(8)), Rational(BigInt(1), BigInt(10)),
                               Rational(BigInt(1), BigInt(4)), Rational(1)};
    auto chain = build_chain(3, 1, rates);
    auto pi = stationary(chain);

    // TV on every step; chi-square on a 50-step thinning so the statistic
    // actually follows its null distribution (raw visit counts of a Markov
    // chain are autocorrelated).
    const std::uint64_t steps = 10000000, thin = 50;
    auto r1 = simulate(chain, steps, 2024, 10000, thin);
    auto r2 = simulate(chain, steps, 2024, 10000, thin);
    bool identical = r1.counts == r2.counts && r1.final_state == r2.final_state;

    double tv = total_variation_distance(r1.counts, pi);
    double chi2 = chi_square_statistic(r1.thinned_counts, pi);
    double crit = chi_square_critical(static_cast<int>(pi.size()) - 1);
    double dt = seconds_since(t0);

    bool ok = identical && tv < 0.01 && chi2 < crit && dt < 120.0;
    report(10, "Monte Carlo N=3 r=1: TV < 0.01, chi-square at 99%, bit-identical reruns", ok,
           "tv=" + std::to_string(tv) + " chi2(thinned)=" + std::to_string(chi2) + " crit=" +
               std::to_string(crit) + " runtime=" + std::to_string(dt) + "s");
}

// --- criterion 11: anchors ------------------------------------------------
void criterion_anchors() {
    bool ok = true;
    std::string detail;

    auto tasep = make_param_point<Rational>(Rational(0), Rational(0), Rational(0), Rational(0),
                                            Rational(0), 12);
    if (!(tasep.alpha == Rational(1) && tasep.beta == Rational(1))) {
        ok = false;
        detail = "TASEP point does not derive alpha=beta=1";
    }
    if (ok && !(Z(tasep, 2).eval(Rational(1)) == Rational(5))) {
        ok = false;
        detail = "Z_2(1) != 5";
    }

    ChainRates<Rational> rates{Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(3)),
                               Rational(BigInt(1), BigInt(8)), Rational(BigInt(1), BigInt(9)),
                               Rational(BigInt(1), BigInt(4)), Rational(1)};
    auto chain = build_chain(1, 0, rates);
    auto pi = stationary(chain);
    Rational denom = rates.alpha + rates.beta + rates.gamma + rates.delta;
    if (ok && !(pi[chain.state_index("2")] == (rates.alpha + rates.delta) / denom)) {
        ok = false;
        detail = "N=1 occupation probability mismatch";
    }

    auto ones = band_from_diagonals<Rational>([](int) { return Rational(1); },
                                              [](int) { return Rational(1); },
                                              [](int) { return Rational(1); }, Rational(0));
    const long long motzkin[] = {1, 1, 2, 4, 9, 21, 51};
    for (int n = 0; n <= 6 && ok; ++n)
        if (!(path_gf(ones, n, 0) == Rational(motzkin[n]))) {
            ok = false;
            detail = "Motzkin number mismatch at N=" + std::to_string(n);
        }
    report(11, "anchors: Z_2(1)=5 at TASEP, N=1 occupation law, Motzkin numbers", ok, detail);
}

} // namespace

int main() {
    std::printf("exact-arithmetic acceptance suite\n");
    criterion_relations();
    criterion_main_theorem();
    criterion_stationary();
    criterion_motzkin();
    criterion_jacobi_trudi();
    criterion_refinement();
    criterion_section7();
    criterion_aw_bridge();
    criterion_q1();
    criterion_monte_carlo();
    criterion_anchors();
    std::printf("%d of 11 criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
