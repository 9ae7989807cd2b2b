#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symfun/detpfaff.hpp"
#include "symfun/genfun.hpp"
#include "symfun/io.hpp"
#include "symfun/parallel.hpp"
#include "symfun/symfun.hpp"
#include "symfun/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Route { Symmetrizer, Gf, Det, Pfaffian };

struct RunConfig {
    std::string family = "s_kl";
    std::string route = "symmetrizer";
    std::string lambda;
    int n = 1;
    std::string fgl = "universal";
    bool factorial = false;
    bool t_on = false;
    int cap = -1;
    std::string out = "json";
    std::string path;
    std::uint64_t seed = 1;
    int threads = 0;
    // verify / table
    std::string suite;
    int max_weight = -1;
    int max_n = -1;
};

Route parse_route(const std::string& s) {
    if (s == "symmetrizer") return Route::Symmetrizer;
    if (s == "gf") return Route::Gf;
    if (s == "det") return Route::Det;
    if (s == "pfaffian") return Route::Pfaffian;
    throw UsageError("unknown route '" + s + "'");
}

const char* kRouteMatrix =
    "supported family x route combinations:\n"
    "  symmetrizer: s_kl, s_uf, p, q, hp, hq\n"
    "  gf:          s_kl, p, q, hp, hq\n"
    "  det:         s_kl with --fgl additive (Jacobi-Trudi) or multiplicative (Grothendieck)\n"
    "  pfaffian:    q with --fgl additive (Q) or multiplicative (GQ)";

[[noreturn]] void reject(const std::string& why) { throw UsageError(why + "\n" + kRouteMatrix); }

sf::FamilySpec build_spec(const RunConfig& c, const sf::Partition& lam, int cap) {
    sf::FamilySpec s;
    s.family = sf::parse_family(c.family);
    s.lambda = lam;
    s.n = c.n;
    s.factorial = c.factorial;
    s.t_on = c.t_on;
    s.fgl = sf::FormalGroupLaw::from_name(c.fgl);
    s.cap = cap >= 0 ? cap : lam.weight() + c.n;
    s.validate();
    return s;
}

sf::TruncSeries compute_one(const RunConfig& c, Route route, const sf::Partition& lam) {
    sf::FamilySpec s = build_spec(c, lam, c.cap);
    sf::Family fam = s.effective_family();
    int cap = s.effective_cap();
    auto fgl_kind = s.fgl.kind();
    bool additive = fgl_kind == sf::FormalGroupLaw::Kind::Additive;
    bool mult = fgl_kind == sf::FormalGroupLaw::Kind::Multiplicative;
    switch (route) {
        case Route::Symmetrizer: return sf::eval_family(s);
        case Route::Gf:
            if (fam == sf::Family::S_UF) reject("family s_uf has no generating-function route");
            return sf::gf_coefficient(s);
        case Route::Det:
            if (fam != sf::Family::S_KL || !(additive || mult)) reject("route det needs family s_kl with an additive or multiplicative law");
            return additive ? sf::jacobi_trudi_schur(lam, s.n, s.factorial, s.b, cap)
                            : sf::grothendieck_det(lam, s.n, s.factorial, s.b, cap);
        case Route::Pfaffian:
            if (fam != sf::Family::Q || !(additive || mult)) reject("route pfaffian needs family q with an additive or multiplicative law");
            return additive ? sf::q_pfaffian(lam, s.n, s.factorial, s.b, cap) : sf::gq_pfaffian(lam, s.n, s.factorial, s.b, cap);
    }
    return {};
}

void check_route_early(const RunConfig& c, Route route) {
    sf::Family fam = sf::parse_family(c.family);
    if (c.t_on && (fam == sf::Family::P || fam == sf::Family::Q)) fam = fam == sf::Family::P ? sf::Family::HP : sf::Family::HQ;
    if (route == Route::Det && fam != sf::Family::S_KL) reject("route det does not support family " + c.family);
    if (route == Route::Pfaffian && fam != sf::Family::Q) reject("route pfaffian does not support family " + c.family);
    if (route == Route::Gf && fam == sf::Family::S_UF) reject("route gf does not support family s_uf");
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + c.path);
    f << text;
}

std::string render(const RunConfig& c, const sf::TruncSeries& s) {
    if (c.out == "json") return sf::to_json(s).dump(2) + "\n";
    if (c.out == "csv") return sf::to_csv(s);
    return sf::to_pretty(s);
}

int run_compute(const RunConfig& c) {
    Route route = parse_route(c.route);
    check_route_early(c, route);
    sf::Partition lam = sf::Partition::parse(c.lambda);
    emit(c, render(c, compute_one(c, route, lam)));
    return 0;
}

int run_table(const RunConfig& c) {
    Route route = parse_route(c.route);
    check_route_early(c, route);
    if (c.max_weight < 0) throw UsageError("table needs --max-weight");
    sf::Family fam = sf::parse_family(c.family);
    bool strict = fam == sf::Family::P || fam == sf::Family::Q;
    std::vector<sf::Partition> lams =
        strict ? sf::strict_partitions_up_to(c.max_weight, c.n) : sf::partitions_up_to(c.max_weight, c.n);
    std::vector<sf::TruncSeries> values(lams.size());
    sf::parallel_for(lams.size(), [&](std::size_t i) { values[i] = compute_one(c, route, lams[i]); });
    if (c.out == "json") {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < lams.size(); ++i)
            rows.push_back(ordered_json{{"lambda", lams[i].parts()}, {"series", sf::to_json(values[i])}});
        emit(c, rows.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < lams.size(); ++i) {
        os << "# lambda = " << lams[i].str() << "\n" << (c.out == "csv" ? sf::to_csv(values[i]) : sf::to_pretty(values[i]));
        if (i + 1 < lams.size()) os << "\n";
    }
    emit(c, os.str());
    return 0;
}

int run_verify(const RunConfig& c) {
    if (c.suite.empty()) throw UsageError("verify needs --suite");
    std::vector<std::string> names;
    if (c.suite == "all") {
        for (auto& s : sf::suite_catalog()) names.push_back(s.name);
    } else if (sf::has_suite(c.suite)) {
        names.push_back(c.suite);
    } else {
        std::string known;
        for (auto& s : sf::suite_catalog()) known += "\n  " + s.name + ": " + s.summary;
        throw UsageError("unknown suite '" + c.suite + "'; known suites:" + known);
    }
    sf::SuiteOptions opt;
    opt.cap = c.cap;
    opt.max_weight = c.max_weight;
    opt.max_n = c.max_n;
    opt.seed = c.seed;
    bool all_pass = true;
    ordered_json report = ordered_json::array();
    for (auto& name : names) {
        std::size_t done = 0;
        opt.progress = [&](const sf::CaseResult& r) {
            ++done;
            std::fprintf(stderr, "[%s %zu] %s %s (%.3fs)%s%s\n", name.c_str(), done, r.pass ? "pass" : "FAIL",
                         r.key.c_str(), r.seconds, r.pass ? "" : ": ", r.detail.c_str());
        };
        auto t0 = std::chrono::steady_clock::now();
        auto results = sf::run_suite(name, opt);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::size_t passed = 0;
        ordered_json cases = ordered_json::array();
        for (auto& r : results) {
            passed += r.pass;
            ordered_json j{{"key", r.key}, {"pass", r.pass}};
            if (!r.pass) j["detail"] = r.detail;
            cases.push_back(std::move(j));
        }
        all_pass = all_pass && passed == results.size();
        std::fprintf(stderr, "%s: %zu/%zu passed in %.2fs\n", name.c_str(), passed, results.size(), secs);
        report.push_back(ordered_json{{"suite", name}, {"passed", passed}, {"total", results.size()},
                                      {"pass", passed == results.size()}, {"cases", std::move(cases)}});
    }
    if (c.out == "json") {
        emit(c, report.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (auto& s : report) {
            os << s["suite"].get<std::string>() << ": " << s["passed"].get<std::size_t>() << "/"
               << s["total"].get<std::size_t>() << (s["pass"].get<bool>() ? " pass" : " FAIL") << "\n";
            for (auto& k : s["cases"])
                if (!k["pass"].get<bool>())
                    os << "  FAIL " << k["key"].get<std::string>() << ": " << k["detail"].get<std::string>() << "\n";
        }
        emit(c, os.str());
    }
    return all_pass ? 0 : 1;
}

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--fgl", c.fgl, "additive | multiplicative | universal | custom:<path>");
    app->add_option("--cap", c.cap, "truncation cap (default |lambda| + n)");
    app->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app->add_option("-o,--output", c.path, "write output to a file");
    app->add_option("--seed", c.seed, "seed for randomized suites");
    app->add_option("--threads", c.threads, "worker threads (SYMFUN_THREADS overrides the default)");
}

void add_family(CLI::App* app, RunConfig& c) {
    app->add_option("--family", c.family, "s_kl | s_uf | p | q | hp | hq");
    app->add_option("--route", c.route, "symmetrizer | gf | det | pfaffian");
    app->add_option("--n", c.n, "number of variables")->check(CLI::Range(1, 8));
    app->add_flag("--factorial", c.factorial, "use the parameters b");
    app->add_flag("--t", c.t_on, "keep t symbolic (p -> hp, q -> hq)");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"Exact symmetric functions over formal group laws"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute one function");
    add_family(compute, c);
    add_common(compute, c);
    compute->add_option("--lambda", c.lambda, "partition, comma separated (empty for the empty partition)");

    auto* table = app.add_subcommand("table", "compute every partition up to a weight bound");
    add_family(table, c);
    add_common(table, c);
    table->add_option("--max-weight", c.max_weight, "largest |lambda|")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, c);
    verify->add_option("--suite,--theorem", c.suite, "suite name, or 'all'")->required();
    verify->add_option("--max-weight", c.max_weight, "override the suite's weight bound");
    verify->add_option("--n", c.max_n, "override the suite's bound on n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c.threads > 0 && !std::getenv("SYMFUN_THREADS")) sf::set_thread_count(c.threads);
        if (*compute) return run_compute(c);
        if (*table) return run_table(c);
        return run_verify(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
