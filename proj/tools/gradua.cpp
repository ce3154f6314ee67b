// gradua: command-line front end for the graded-ring and stable-module
// engines. Exit codes: 0 all checks pass, 1 some check failed, 2 usage or
// input error, 3 inconclusive results present (and nothing failed).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradua/fileio.hpp"
#include "gradua/genpoint.hpp"
#include "gradua/scenario.hpp"
#include "gradua/stmod.hpp"

using namespace gradua;

namespace {

struct WindowOpt {
    int64_t lo = -8, hi = 8;
};

bool parse_window(const std::string& s, WindowOpt& w) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return false;
    try {
        w.lo = std::stoll(s.substr(0, colon));
        w.hi = std::stoll(s.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return w.lo <= w.hi;
}

int degree_bound_env() {
    if (const char* s = std::getenv("GRADUA_DEGREE_BOUND")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return -1;
}

std::filesystem::path cache_dir() {
    if (const char* s = std::getenv("GRADUA_CACHE_DIR")) return s;
    if (const char* x = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(x) / "gradua";
    if (const char* h = std::getenv("HOME"))
        return std::filesystem::path(h) / ".cache" / "gradua";
    return std::filesystem::temp_directory_path() / "gradua-cache";
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

int status_code(const Report& r) {
    switch (r.overall()) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Inconclusive: return 3;
    }
    return 1;
}

void print_table(const std::map<int64_t, int64_t>& t) {
    for (const auto& [n, d] : t) std::cout << n << " " << d << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradua: graded duality workbench"};
    app.require_subcommand(1);

    std::string ringFile, idealFile, moduleFile, algebraFile, m1File, m2File;
    std::string windowStr = "-8:8", scenarioName, jsonOut, classSpec, op;
    int syzygyN = 1, trials = 50, nMax = 4;
    uint64_t seed = 7;

    // ring subcommand
    auto* ring = app.add_subcommand("ring", "graded ring operations");
    ring->add_option("file", ringFile)->required();
    ring->add_option("op", op)->required()->check(CLI::IsMember({"groebner", "hilbert", "dim", "noether"}));
    ring->add_option("--window", windowStr);

    // genpoint
    auto* gen = app.add_subcommand("genpoint", "generic closed point certificate");
    gen->add_option("file", ringFile)->required();
    gen->add_option("--prime", idealFile)->required();

    // module
    auto* mod = app.add_subcommand("module", "graded module operations");
    mod->add_option("ring", ringFile)->required();
    mod->add_option("module", moduleFile)->required();
    mod->add_option("op", op)->required()->check(CLI::IsMember({"expand", "localcoh", "matlis", "hominj"}));
    std::string pointFile;
    mod->add_option("--point", pointFile);
    mod->add_option("--window", windowStr);

    // gorenstein
    auto* gor = app.add_subcommand("gorenstein", "Gorenstein check at the irrelevant ideal");
    gor->add_option("file", ringFile)->required();
    gor->add_option("--window", windowStr);

    // stmod
    auto* st = app.add_subcommand("stmod", "stable module category operations");
    st->add_option("algebra", algebraFile)->required();
    st->add_option("op", op)->required()->check(CLI::IsMember({"syzygy", "stablehom", "tate", "ar", "koszul"}));
    st->add_option("-n", syzygyN);
    st->add_option("--m1", m1File);
    st->add_option("--m2", m2File);
    st->add_option("--module", moduleFile);
    st->add_option("--trials", trials);
    st->add_option("--seed", seed);
    st->add_option("--class", classSpec);

    // scenario
    auto* sc = app.add_subcommand("scenario", "run a named scenario");
    sc->add_option("name", scenarioName)->required();
    sc->add_option("--n-max", nMax);
    sc->add_option("--seed", seed);
    sc->add_option("--trials", trials);
    sc->add_option("--json", jsonOut);
    bool timings = false;
    sc->add_flag("--timings", timings);
    bool noCache = false;
    sc->add_flag("--no-cache", noCache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        WindowOpt w;
        if (!parse_window(windowStr, w)) {
            std::cerr << "bad --window, expected lo:hi\n";
            return 2;
        }

        if (ring->parsed()) {
            RingPtr R = load_ring(ringFile);
            if (op == "groebner") {
                for (const auto& g : groebner_basis(HomIdeal(R, {})))
                    std::cout << R->ctx().to_string(g) << "\n";
            } else if (op == "hilbert") {
                auto hs = hilbert_series(R, {}, std::max<int64_t>(w.hi, 0));
                for (int64_t n = std::max<int64_t>(w.lo, 0); n <= w.hi; ++n)
                    std::cout << n << " " << hs.dim_at(n) << "\n";
            } else if (op == "dim") {
                std::cout << krull_dimension(R) << "\n";
            } else if (op == "noether") {
                for (const auto& a : noether_normalize(R, zero_ideal(R)))
                    std::cout << R->ctx().to_string(a) << "\n";
            }
            return 0;
        }

        if (gen->parsed()) {
            RingPtr R = load_ring(ringFile);
            HomIdeal p = load_ideal(idealFile, R);
            GenPointConfig cfg;
            cfg.degree_bound = degree_bound_env();
            auto cert = generic_closed_point(R, p, cfg);
            nlohmann::json j;
            j["degenerate"] = cert.degenerate;
            j["dimension"] = cert.dimension_d;
            std::vector<std::string> noeth, shear, q, m;
            for (const auto& x : cert.noether_elements) noeth.push_back(R->ctx().to_string(x));
            const RingCtx& EC = cert.extended_ring->ctx();
            for (const auto& x : cert.shear_elements) shear.push_back(EC.to_string(x));
            for (const auto& x : cert.q_ideal.gens()) q.push_back(EC.to_string(x));
            for (const auto& x : cert.m_ideal.gens()) m.push_back(EC.to_string(x));
            j["noether"] = noeth;
            j["shears"] = shear;
            j["q"] = q;
            j["m"] = m;
            j["residue"] = {{"degree0_extension", cert.residue.degree0_extension},
                            {"periodicity", cert.residue.periodicity}};
            j["checks"] = cert.checks_passed;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (mod->parsed()) {
            RingPtr R = load_ring(ringFile);
            ModulePresentation M = load_module(moduleFile, R);
            if (op == "expand") {
                std::cout << degreewise_to_json(degreewise_expand(M, w.lo, w.hi));
            } else if (op == "localcoh") {
                auto lc = local_cohomology_irrelevant(M, w.lo, w.hi);
                for (size_t i = 0; i < lc.h.size(); ++i) {
                    std::cout << "H^" << i << ":\n";
                    print_table(lc.h[i].table());
                }
            } else if (op == "matlis") {
                auto E = degreewise_expand(M, w.lo, w.hi);
                std::cout << degreewise_to_json(graded_matlis_dual(E));
            } else if (op == "hominj") {
                if (pointFile.empty()) {
                    std::cerr << "hominj needs --point\n";
                    return 2;
                }
                HomIdeal m = load_ideal(pointFile, R);
                std::cout << degreewise_to_json(hom_into_injective(M, m, w.lo, w.hi));
            }
            return 0;
        }

        if (gor->parsed()) {
            RingPtr R = load_ring(ringFile);
            auto rep = gorenstein_check_irrelevant(R, w.lo, w.hi);
            std::cout << (rep.pass ? "pass" : "fail") << " dimension " << rep.dimension
                      << " twist " << rep.a_invariant << "\n";
            return rep.pass ? 0 : 1;
        }

        if (st->parsed()) {
            AlgebraPtr A = load_algebra(algebraFile);
            if (op == "syzygy") {
                FDModule M = moduleFile.empty() ? trivial_module(A)
                                                : load_fdmodule(moduleFile, A);
                FDModule s = syzygy(M, syzygyN);
                std::cout << "dim " << s.dim() << "\n";
            } else if (op == "stablehom") {
                if (m1File.empty() || m2File.empty()) {
                    std::cerr << "stablehom needs --m1 and --m2\n";
                    return 2;
                }
                FDModule M = load_fdmodule(m1File, A);
                FDModule N = load_fdmodule(m2File, A);
                std::cout << stable_hom(M, N).dim() << "\n";
            } else if (op == "tate") {
                int pass = 0;
                for (int i = 0; i < trials; ++i) {
                    FDModule M = random_module(A, seed + uint64_t(i) * 1000003ull, 12);
                    FDModule N = random_module(A, seed + uint64_t(i) * 1000003ull + 17, 12);
                    auto t = tate_duality_check(M, N);
                    if (t.lhs == t.rhs) ++pass;
                }
                std::cout << pass << "/" << trials << "\n";
                return pass == trials ? 0 : 1;
            } else if (op == "ar") {
                if (moduleFile.empty()) {
                    std::cerr << "ar needs --module\n";
                    return 2;
                }
                FDModule M = load_fdmodule(moduleFile, A);
                std::vector<FDModule> family = {M, regular_module(A), trivial_module(A)};
                auto tri = ar_triangle(M, family);
                std::cout << "tau dim " << tri.tau_term.dim() << ", middle dim "
                          << tri.middle.dim() << ", non-split " << tri.non_split << "\n";
            } else if (op == "koszul") {
                if (classSpec.empty()) {
                    std::cerr << "koszul needs --class deg:c0,c1,...\n";
                    return 2;
                }
                auto colon = classSpec.find(':');
                size_t deg = std::stoul(classSpec.substr(0, colon));
                std::vector<FE> coeffs;
                const Field& F = *A->field();
                std::string rest = classSpec.substr(colon + 1);
                std::stringstream ss(rest);
                std::string item;
                while (std::getline(ss, item, ','))
                    coeffs.push_back(F.from_int(std::stoll(item)));
                FDModule kb = koszul_object(A, coh_class(A, deg, coeffs));
                std::cout << "dim " << kb.dim() << "\n";
            }
            return 0;
        }

        if (sc->parsed()) {
            ScenarioParams params;
            params.n_max = nMax;
            params.seed = seed;
            params.trials = trials;
            params.degree_bound = degree_bound_env();

            // content-hash cache of canonical reports; optimization only,
            // reads revalidate the key before use
            std::string key;
            {
                nlohmann::json k;
                k["name"] = scenarioName;
                k["n_max"] = params.n_max;
                k["seed"] = params.seed;
                k["trials"] = params.trials;
                k["version"] = kToolVersion;
                key = k.dump();
            }
            std::filesystem::path cacheFile =
                cache_dir() / (std::to_string(fnv1a(key)) + ".json");

            Report rep;
            bool fromCache = false;
            if (!noCache && std::filesystem::exists(cacheFile)) {
                try {
                    std::ifstream in(cacheFile);
                    nlohmann::json j;
                    in >> j;
                    if (j.value("cache_key", "") == key) {
                        // revalidated: rerun anyway only when timings are
                        // requested, since the stored body is canonical
                        std::string body = j.value("body", "");
                        if (!body.empty() && !timings) {
                            std::cout << body;
                            if (!jsonOut.empty()) {
                                std::ofstream out(jsonOut);
                                out << body;
                            }
                            // reconstruct exit code from the stored overall
                            auto parsed = nlohmann::json::parse(body);
                            std::string overall = parsed.value("overall", "fail");
                            return overall == "pass" ? 0 : overall == "inconclusive" ? 3 : 1;
                        }
                    }
                } catch (...) {
                    fromCache = false;
                }
            }
            (void)fromCache;

            rep = run_scenario(scenarioName, params);
            std::string body = emit_report(rep, ReportFormat::Json, false);
            if (!jsonOut.empty()) {
                std::ofstream out(jsonOut);
                out << body;
            }
            std::cout << emit_report(rep, ReportFormat::TextTable, timings);
            if (!noCache) {
                std::error_code ec;
                std::filesystem::create_directories(cache_dir(), ec);
                if (!ec) {
                    nlohmann::json j;
                    j["cache_key"] = key;
                    j["body"] = body;
                    std::ofstream out(cacheFile);
                    out << j.dump();
                }
            }
            return status_code(rep);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::UsageError) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
