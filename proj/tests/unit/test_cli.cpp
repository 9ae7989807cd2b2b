#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(SYMFUN_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("compute emits canonical JSON") {
    Run r = run("compute --family hq --lambda 1 --n 3 --fgl additive --factorial --route symmetrizer");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["cap"] == 4);
    CHECK(j["terms"].size() == 6);
    Run g = run("compute --family hq --lambda 1 --n 3 --fgl additive --factorial --route gf");
    CHECK(g.out == r.out);
}

TEST_CASE("routes agree byte for byte") {
    Run sym = run("compute --family s_kl --lambda 2,1 --n 3 --fgl additive --route symmetrizer");
    Run gf = run("compute --family s_kl --lambda 2,1 --n 3 --fgl additive --route gf");
    Run det = run("compute --family s_kl --lambda 2,1 --n 3 --fgl additive --route det");
    CHECK(sym.status == 0);
    CHECK(sym.out == gf.out);
    CHECK(sym.out == det.out);
    Run q = run("compute --family q --lambda 2,1 --n 3 --fgl multiplicative --factorial --route symmetrizer --cap 7");
    Run pf = run("compute --family q --lambda 2,1 --n 3 --fgl multiplicative --factorial --route pfaffian --cap 7");
    CHECK(q.out == pf.out);
}

TEST_CASE("other output formats") {
    Run csv = run("compute --family s_kl --lambda 1 --n 2 --fgl additive --out csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("coeff,", 0) == 0);
    Run pretty = run("compute --family s_kl --lambda 1 --n 2 --fgl additive --out pretty");
    CHECK(pretty.status == 0);
    Run table = run("table --family p --n 2 --fgl additive --max-weight 3");
    CHECK(table.status == 0);
    CHECK(nlohmann::json::parse(table.out).size() == 5);
}

TEST_CASE("verify") {
    Run ok = run("verify --suite fgl-axioms --cap 6");
    CHECK(ok.status == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j[0]["pass"] == true);
    CHECK(run("verify --theorem worked-examples").status == 0);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("compute --family hp --lambda 1 --n 2 --route det").status == 2);
    CHECK(run("compute --family s_uf --lambda 1 --n 2 --route gf").status == 2);
    CHECK(run("compute --family p --lambda 2,2 --n 3").status == 2);
    CHECK(run("compute --family nope --lambda 1 --n 2").status == 2);
    CHECK(run("compute --family s_kl --lambda 1,1,1 --n 2").status == 2);
    CHECK(run("verify --suite nope").status == 2);
    CHECK(run("bogus").status == 2);
}
