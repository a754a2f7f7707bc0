// Command-line front end: exact partition functions, Koornwinder moments,
// stationary laws, simulation, and the verification suites.

#include <asep/chain.hpp>
#include <asep/f_identities.hpp>
#include <asep/json_io.hpp>
#include <asep/moments.hpp>
#include <asep/q1.hpp>
#include <asep/usw.hpp>
#include <asep/words.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace asep;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

std::map<std::string, Rational> parse_kv(const std::string& text) {
    std::map<std::string, Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("expected key=value in '" + item + "'");
        out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Rational take(std::map<std::string, Rational>& kv, const std::string& key, Rational fallback,
              bool required = false) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (required) throw CLI::ValidationError("missing parameter '" + key + "'");
        return fallback;
    }
    Rational v = it->second;
    kv.erase(it);
    return v;
}

ParamPoint<Rational> point_from_params(const std::string& text, int horizon) {
    auto kv = parse_kv(text);
    Rational a = take(kv, "a", Rational(0), true);
    Rational b = take(kv, "b", Rational(0), true);
    Rational c = take(kv, "c", Rational(0), true);
    Rational d = take(kv, "d", Rational(0), true);
    Rational q = take(kv, "q", Rational(0), true);
    if (!kv.empty()) throw CLI::ValidationError("unknown parameter '" + kv.begin()->first + "'");
    return make_param_point(a, b, c, d, q, horizon);
}

ChainRates<Rational> rates_from_text(const std::string& text) {
    auto kv = parse_kv(text);
    ChainRates<Rational> r{take(kv, "alpha", Rational(0), true), take(kv, "beta", Rational(0), true),
                           take(kv, "gamma", Rational(0)), take(kv, "delta", Rational(0)),
                           take(kv, "q", Rational(0)), take(kv, "u", Rational(1))};
    if (!kv.empty()) throw CLI::ValidationError("unknown rate '" + kv.begin()->first + "'");
    return r;
}

Partition partition_from_text(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        parts.push_back(std::stoi(text.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(parts);
}

json poly_or_value(const Poly<Rational>& p, const std::string& xi) {
    if (xi == "symbolic") return poly_to_json(p);
    return p.eval(Rational::parse(xi)).str();
}

struct VerifyRow {
    std::string suite, instance;
    bool pass;
    std::string note;
    std::optional<json> check = std::nullopt;  // {"holds","lhs","rhs"} where both sides are emitted
};

void print_rows(const std::vector<VerifyRow>& rows, const std::string& format) {
    if (format == "csv") {
        std::printf("suite,instance,pass,note\n");
        for (const auto& r : rows)
            std::printf("%s,%s,%s,%s\n", r.suite.c_str(), r.instance.c_str(),
                        r.pass ? "pass" : "FAIL", r.note.c_str());
        return;
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json row{{"suite", r.suite},
                     {"instance", r.instance},
                     {"pass", r.pass},
                     {"note", r.note}};
            if (r.check) row["check"] = *r.check;
            arr.push_back(std::move(row));
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (const auto& r : rows)
        std::printf("%-14s %-34s %s%s%s\n", r.suite.c_str(), r.instance.c_str(),
                    r.pass ? "pass" : "FAIL", r.note.empty() ? "" : "  ", r.note.c_str());
}

struct VerifyOptions {
    int max_n = 5;
    int max_r = 3;
    int max_m = 5;
    int box = 3;
    int points = 3;
    std::uint64_t seed = 1;
};

void run_verify_suite(const std::string& suite, const VerifyOptions& opt,
                      std::vector<VerifyRow>& rows) {
    SplitMix64 rng(opt.seed);
    int horizon = 2 * opt.max_n + opt.max_r + 16;

    if (suite == "relations" || suite == "all") {
        for (int k = 0; k < opt.points; ++k) {
            auto p = random_param_point(rng, horizon);
            auto rep = check_ansatz_relations(p, 8);
            rows.push_back({"relations", "point " + std::to_string(k), rep.ok(),
                            rep.ok() ? "" : rep.failures.front().relation});
        }
    }
    if (suite == "main-theorem" || suite == "all") {
        for (int k = 0; k < opt.points; ++k) {
            auto p = random_param_point(rng, horizon);
            auto ops = build_operators(p);
            for (int n = 1; n <= opt.max_n; ++n)
                for (int r = 0; r <= n; ++r) {
                    auto chk = verify_main_theorem(p, ops, n, r);
                    std::string inst = "point " + std::to_string(k) + " N=" + std::to_string(n) +
                                       " r=" + std::to_string(r);
                    std::string note = chk.printed_holds
                                           ? "printed (1-q)^r form also holds"
                                           : "printed (1-q)^r form differs";
                    json check{{"holds", chk.factor_free_holds},
                               {"lhs", poly_to_json(chk.k_poly)},
                               {"rhs", poly_to_json(chk.z_poly)}};
                    rows.push_back({"main-theorem", inst, chk.factor_free_holds, note,
                                    std::move(check)});
                }
        }
    }
    if (suite == "jacobi-trudi" || suite == "all") {
        for (int k = 0; k < opt.points; ++k) {
            auto p = random_param_point(rng, horizon);
            auto ops = build_operators(p);
            bool ok = true;
            std::string bad;
            for (const auto& lam : partitions_in_box(3, std::max(2, opt.max_m - 1)))
                if (!(jacobi_trudi_K(p, ops, lam) == koornwinder_K(p, ops, lam))) {
                    ok = false;
                    bad = lam.str();
                    break;
                }
            rows.push_back({"jacobi-trudi", "point " + std::to_string(k), ok,
                            ok ? "" : "first failure at " + bad});
        }
    }
    if (suite == "refinement" || suite == "all") {
        auto p = random_param_point(rng, horizon);
        auto ops = build_operators(p);
        std::vector<std::string> words{""};
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= std::min(opt.max_n, 5) && ok; ++n) {
            std::vector<std::string> next;
            for (const auto& w : words)
                if (static_cast<int>(w.size()) == n - 1) {
                    next.push_back(w + 'D');
                    next.push_back(w + 'E');
                }
            for (const auto& w : next)
                for (int r = 0; r <= n && ok; ++r)
                    if (!verify_refinement(p, ops, w, r).holds) {
                        ok = false;
                        bad = w + " r=" + std::to_string(r);
                    }
            words.insert(words.end(), next.begin(), next.end());
        }
        rows.push_back({"refinement", "all words N<=" + std::to_string(std::min(opt.max_n, 5)), ok,
                        ok ? "" : "fails at " + bad});
        bool fc = true;
        for (int n = 0; n <= opt.max_n && fc; ++n)
            for (int r = 0; r <= n && fc; ++r) fc = verify_finalcheck(p, ops, n, r).holds;
        rows.push_back({"refinement", "D-word extraction N<=" + std::to_string(opt.max_n), fc, ""});
    }
    if (suite == "section7" || suite == "all") {
        auto p = random_param_point(rng, horizon, true, true);
        Section7Bounds bounds;
        bounds.max_m = opt.max_m;
        bounds.max_r = opt.max_r;
        bounds.max_n = opt.max_n + 2;
        bounds.max_m_coeff = std::min(opt.max_m, 5);
        auto rep = verify_section7(p, bounds);
        for (const auto& r : rep.results) {
            json check{{"identity", r.identity},
                       {"indices", r.indices},
                       {"holds", r.holds},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs}};
            rows.push_back({"section7", r.identity + " " + r.indices, r.holds,
                            r.holds ? "" : r.lhs + " vs " + r.rhs, std::move(check)});
        }
    }
    if (suite == "motzkin" || suite == "all") {
        auto p = random_param_point(rng, horizon);
        auto C = fugacity_operator(build_operators(p));
        bool ok = true;
        for (int n = 0; n <= std::min(opt.max_n + 1, 7) && ok; ++n)
            for (int r = 0; r <= n && ok; ++r) {
                std::vector<BandOperator<Poly<Rational>>> word(n, C);
                ok = path_gf(C, n, r) == eval_bra_word_ket(word, r) &&
                     verify_det_motzkin(C, n, r).holds;
            }
        rows.push_back({"motzkin", "paths == powers, det identity", ok, ""});
    }
    if (suite == "q1" || suite == "all") {
        for (int k = 0; k < opt.points; ++k) {
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
            bool pos = true;
            for (const auto& lam : partitions_in_box(opt.box, opt.box)) {
                auto res = positivity_q1(p, lam);
                pos = pos && res.all_nonnegative && res.matches_determinant;
            }
            rows.push_back({"q1", "point " + std::to_string(k), rep.ok() && pos,
                            std::to_string(rep.failures()) + " identity failures" +
                                (pos ? "" : ", positivity failure")});
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact two-species exclusion / Koornwinder moment toolkit"};
    app.require_subcommand(1);

    std::string params_text, rates_text, partition_text, xi_text = "symbolic";
    std::string format = "table", suite, bounds_text;
    int N = 3, r = 0, points = 3;
    std::uint64_t seed = 1, steps = 100000, burnin = 1000;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--params", params_text,
                        "comma list a=..,b=..,c=..,d=..,q=.. of exact rationals")
            ->required();
    };
    auto add_rates = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--rates", rates_text,
                                  "comma list alpha=..,beta=..[,gamma=..,delta=..,q=..,u=..]");
        if (required) o->required();
    };

    auto* zn = app.add_subcommand("zn", "fugacity partition function Z_N(xi)");
    zn->add_option("--N", N)->required();
    zn->add_option("--xi", xi_text, "rational value or 'symbolic'");
    add_params(zn);

    auto* z2 = app.add_subcommand("z2", "two-species partition function Z_{N,r}(xi)");
    z2->add_option("--N", N)->required();
    z2->add_option("--r", r)->required();
    z2->add_option("--xi", xi_text);
    add_params(z2);

    auto* kw = app.add_subcommand("koornwinder", "Koornwinder moment K_lambda(xi)");
    kw->add_option("--partition", partition_text, "comma-separated parts, e.g. 3,2,1")->required();
    kw->add_option("--xi", xi_text);
    add_params(kw);

    auto* hook = app.add_subcommand("hook", "q=xi=1 moment via the hook-length product");
    hook->add_option("--partition", partition_text)->required();
    add_rates(hook);

    auto* stat = app.add_subcommand("stationary", "exact stationary distribution");
    stat->add_option("--N", N)->required();
    stat->add_option("--r", r);
    stat->add_option("--format", format, "json|csv|table");
    add_rates(stat);

    auto* weights = app.add_subcommand("ansatz-weights", "matrix-product stationary weights");
    weights->add_option("--N", N)->required();
    weights->add_option("--r", r);
    add_params(weights);

    auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo run");
    sim->add_option("--N", N)->required();
    sim->add_option("--r", r);
    sim->add_option("--steps", steps);
    sim->add_option("--seed", seed);
    sim->add_option("--burnin", burnin);
    sim->add_option("--format", format);
    add_rates(sim);

    auto* paths = app.add_subcommand("paths", "enumerate partial Motzkin paths (0,0) -> (N,r)");
    paths->add_option("--N", N)->required();
    paths->add_option("--r", r);

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite,
                       "relations|main-theorem|jacobi-trudi|refinement|section7|motzkin|q1|all")
        ->required();
    verify->add_option("--N", N, "size bound");
    verify->add_option("--points", points, "number of seeded random parameter points");
    verify->add_option("--seed", seed);
    verify->add_option("--bounds", bounds_text, "comma list like r=3,m=5,box=3");
    verify->add_option("--format", format, "json|csv|table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        int horizon = 2 * N + r + 20;
        if (zn->parsed()) {
            auto p = point_from_params(params_text, horizon);
            std::cout << json{{"Z", poly_or_value(Z(p, N), xi_text)}}.dump(2) << "\n";
        } else if (z2->parsed()) {
            auto p = point_from_params(params_text, horizon);
            std::cout << json{{"Z2", poly_or_value(Z_two_species(p, N, r), xi_text)}}.dump(2)
                      << "\n";
        } else if (kw->parsed()) {
            Partition lam = partition_from_text(partition_text);
            auto p = point_from_params(params_text, lam.part(0) + 2 * lam.length() + 20);
            std::cout << json{{"K", poly_or_value(koornwinder_K(p, lam), xi_text)}}.dump(2)
                      << "\n";
        } else if (hook->parsed()) {
            Partition lam = partition_from_text(partition_text);
            auto rates = rates_from_text(rates_text);
            auto p = make_q1_params(rates.alpha, rates.beta, rates.gamma, rates.delta);
            Rational k = K_hook(p, lam);
            std::cout << json{{"K", k.str()}, {"matches_det", k == K_det_q1(p, lam)}}.dump(2)
                      << "\n";
        } else if (stat->parsed()) {
            auto chain = build_chain(N, r, rates_from_text(rates_text));
            auto pi = stationary(chain);
            if (format == "csv") {
                std::printf("state,probability\n");
                for (std::size_t k = 0; k < pi.size(); ++k)
                    std::printf("%s,%s\n", chain.states[k].c_str(), pi[k].str().c_str());
            } else {
                json out;
                for (std::size_t k = 0; k < pi.size(); ++k) out[chain.states[k]] = pi[k].str();
                std::cout << out.dump(2) << "\n";
            }
        } else if (weights->parsed()) {
            auto p = point_from_params(params_text, horizon);
            auto w = ansatz_weights(p, N, r);
            json out;
            for (std::size_t k = 0; k < w.states.size(); ++k)
                out["weights"][w.states[k]] = w.weights[k].str();
            out["normalization"] = w.total.str();
            std::cout << out.dump(2) << "\n";
        } else if (sim->parsed()) {
            auto chain = build_chain(N, r, rates_from_text(rates_text));
            auto res = simulate(chain, steps, seed, burnin);
            if (format == "csv") {
                std::printf("state,count,frequency\n");
                for (std::size_t k = 0; k < res.counts.size(); ++k)
                    std::printf("%s,%llu,%.9f\n", res.states[k].c_str(),
                                static_cast<unsigned long long>(res.counts[k]),
                                static_cast<double>(res.counts[k]) / static_cast<double>(steps));
            } else {
                json out;
                out["seed"] = seed;
                out["steps"] = steps;
                out["burnin"] = burnin;
                for (std::size_t k = 0; k < res.counts.size(); ++k) {
                    out["counts"][res.states[k]] = res.counts[k];
                    out["frequencies"][res.states[k]] =
                        static_cast<double>(res.counts[k]) / static_cast<double>(steps);
                }
                std::cout << out.dump(2) << "\n";
            }
        } else if (paths->parsed()) {
            json arr = json::array();
            for (const auto& path : enumerate_paths(N, r)) arr.push_back(path_to_json(path));
            std::cout << json{{"paths", arr}}.dump(2) << "\n";
        } else if (verify->parsed()) {
            VerifyOptions opt;
            opt.max_n = N;
            opt.points = points;
            opt.seed = seed;
            if (!bounds_text.empty())
                for (auto& [key, value] : parse_kv(bounds_text)) {
                    int v = static_cast<int>(value.num().convert_to<long long>());
                    if (key == "r") opt.max_r = v;
                    else if (key == "m") opt.max_m = v;
                    else if (key == "box") opt.box = v;
                    else if (key == "N") opt.max_n = v;
                    else throw CLI::ValidationError("unknown bound '" + key + "'");
                }
            const std::vector<std::string> known{"relations", "main-theorem", "jacobi-trudi",
                                                 "refinement", "section7", "motzkin", "q1", "all"};
            if (std::find(known.begin(), known.end(), suite) == known.end()) {
                std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
                return kExitUsage;
            }
            std::printf("suite: %s  seed: %llu  points: %d\n", suite.c_str(),
                        static_cast<unsigned long long>(opt.seed), opt.points);
            std::vector<VerifyRow> rows;
            run_verify_suite(suite, opt, rows);
            print_rows(rows, format);
            bool all_pass = true;
            for (const auto& row : rows) all_pass = all_pass && row.pass;
            std::printf("%zu checks, %s\n", rows.size(), all_pass ? "all pass" : "FAILURES");
            return all_pass ? 0 : kExitVerifyFailure;
        }
        return 0;
    } catch (const DegenerateParameterError& e) {
        std::fprintf(stderr, "degenerate parameters: %s\n", e.vanished.c_str());
        return kExitDegenerate;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUsage;
    }
}
