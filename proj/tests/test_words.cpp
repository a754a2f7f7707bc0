#include <asep/words.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace asep;

namespace {

ParamPoint<Rational> sample_point() {
    return make_param_point<Rational>(Rational(BigInt(1), BigInt(2)), Rational(BigInt(1), BigInt(3)),
                                      Rational(BigInt(-1), BigInt(5)), Rational(BigInt(1), BigInt(7)),
                                      Rational(BigInt(1), BigInt(4)), 24);
}

std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + 'D');
            next.push_back(w + 'E');
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("replacement sets") {
    auto s0 = s_r("DEDE", 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].word() == "DEDE");

    auto s1 = s_r("DE", 1);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].word() == "AE");
    CHECK(s1[1].word() == "DA");

    auto s2 = s_r("DE", 2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].word() == "AA");

    CHECK(s_r("DEDED", 2).size() == 10);
    CHECK_THROWS(s_r("DXE", 1));
}

TEST_CASE("inversion statistic") {
    // X = DE, Z = AA: D(Z)={1}, E(Z)={2} -> one smaller replaced index
    auto z1 = s_r("DE", 2)[0];
    CHECK(inv_E(z1) == 1);
    // X = ED, Z = AA: E(Z)={1} has nothing below it
    auto z2 = s_r("ED", 2)[0];
    CHECK(inv_E(z2) == 0);
    // no replaced E: empty sum
    for (const auto& z : s_r("DDD", 2)) CHECK(inv_E(z) == 0);
}

TEST_CASE("normal form rewriting") {
    Rational q(BigInt(1), BigInt(4));
    auto nf_ed = normal_form<Rational>("ED", q);
    REQUIRE(nf_ed.size() == 1);
    CHECK(nf_ed.at("ED") == Rational(1));

    auto nf_de = normal_form<Rational>("DE", q);
    CHECK(nf_de.at("ED") == q);
    CHECK(nf_de.at("D") == Rational(1));
    CHECK(nf_de.at("E") == Rational(1));

    auto nf = normal_form<Rational>("DDE", q);
    CHECK(nf.at("EDD") == q * q);
    CHECK(nf.at("DD") == Rational(1) + q);
    CHECK(nf.at("ED") == Rational(2) * q);
    CHECK(nf.at("D") == Rational(1));
    CHECK(nf.at("E") == Rational(1));
}

TEST_CASE("normal forms contain only E^l D^m words") {
    Rational q(BigInt(2), BigInt(7));
    for (const auto& w : all_words(5))
        for (const auto& [word, coeff] : normal_form<Rational>(w, q)) {
            CHECK(word.find("DE") == std::string::npos);
            CHECK_FALSE(coeff.is_zero());
        }
}

TEST_CASE("rewriting preserves the matrix evaluation") {
    auto p = sample_point();
    auto ops = build_operators(p);
    for (int n = 1; n <= 6; ++n) {
        // spot-check a deterministic spread of words of each length
        auto words = all_words(n);
        for (std::size_t k = 0; k < words.size(); k += (n <= 4 ? 1 : 5)) {
            const auto& w = words[k];
            for (int r : {0, 1}) {
                Rational direct = word_bracket(ops, w, r);
                Rational via_nf(0);
                for (const auto& [word, coeff] : normal_form<Rational>(w, p.q))
                    via_nf += coeff * word_bracket(ops, word, r);
                INFO("word " << w << " r=" << r);
                CHECK(direct == via_nf);
            }
        }
    }
}

TEST_CASE("refinement identity on all short words") {
    auto p = sample_point();
    auto ops = build_operators(p);
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_words(n))
            for (int r = 0; r <= n; ++r) {
                auto chk = verify_refinement(p, ops, w, r);
                INFO("word " << w << " r=" << r);
                CHECK(chk.holds);
            }
}

TEST_CASE("refinement at r=0 is the plain bracket") {
    auto p = sample_point();
    auto ops = build_operators(p);
    auto chk = verify_refinement(p, ops, "EDDE", 0);
    CHECK(chk.holds);
    CHECK(chk.lhs == word_bracket(ops, "EDDE", 0));
}

TEST_CASE("refinement on random longer words") {
    SplitMix64 rng(103);
    auto p = random_param_point(rng, 24);
    auto ops = build_operators(p);
    for (int n : {6, 7}) {
        for (int iter = 0; iter < 3; ++iter) {
            std::string w;
            for (int k = 0; k < n; ++k) w += (rng.next() & 1) ? 'D' : 'E';
            int r = static_cast<int>(rng.next_in(1, n));
            auto chk = verify_refinement(p, ops, w, r);
            INFO("word " << w << " r=" << r);
            CHECK(chk.holds);
        }
    }
}

TEST_CASE("D-word extraction identity") {
    auto p = sample_point();
    auto ops = build_operators(p);
    for (int n = 0; n <= 5; ++n)
        for (int r = 0; r <= n; ++r) {
            auto chk = verify_finalcheck(p, ops, n, r);
            INFO("N=" << n << " r=" << r);
            CHECK(chk.holds);
        }
}

TEST_CASE("summed refinement reproduces the two-species correspondence") {
    SplitMix64 rng(107);
    auto p = random_param_point(rng, 24);
    auto ops = build_operators(p);
    for (int n = 1; n <= 5; ++n)
        for (int r = 0; r <= n; ++r) {
            auto chk = verify_refinement_sum(p, ops, n, r);
            INFO("N=" << n << " r=" << r);
            CHECK(chk.holds);
        }
}
