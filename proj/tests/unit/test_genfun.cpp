#include "helpers.hpp"

#include "symfun/detpfaff.hpp"
#include "symfun/genfun.hpp"

using namespace testing_helpers;
using sf::Family;
using sf::FamilySpec;
using sf::FormalGroupLaw;
using sf::Partition;

namespace {

FamilySpec spec(Family f, Partition lam, int n, bool factorial, FormalGroupLaw fgl, int cap = -1) {
    FamilySpec s;
    s.family = f;
    s.lambda = std::move(lam);
    s.n = n;
    s.factorial = factorial;
    s.fgl = std::move(fgl);
    s.cap = cap;
    return s;
}

std::vector<TruncSeries> roots(int n, int cap) {
    std::vector<TruncSeries> r;
    for (int j = 1; j <= n; ++j) r.push_back(x(j, cap));
    return r;
}

TruncSeries monomial_x(const std::vector<int>& e, int cap) {
    TruncSeries s = c(1, 1, cap);
    for (std::size_t i = 0; i < e.size(); ++i) s = s * x(static_cast<int>(i) + 1, cap).pow(e[i]);
    return s;
}

}  // namespace

TEST_CASE("Segre series") {
    FormalGroupLaw A = FormalGroupLaw::additive();
    auto zero = sf::segre_series({}, A, 4);
    for (int m = -4; m <= 4; ++m) CHECK(zero.at(m) == (m == 0 ? c(1) : c(0)));
    auto one = sf::segre_series(roots(1, 5), A, 5);
    for (int m = 0; m <= 5; ++m) CHECK(one.at(m) == x(1).pow(m));
    for (int m = -5; m < 0; ++m) CHECK(one.at(m).is_zero());

    FormalGroupLaw U = FormalGroupLaw::universal();
    auto s = sf::segre_series(roots(2, 4), U, 4);
    auto rel = sf::relative_segre(roots(2, 4), {}, U, 4);
    auto same = sf::relative_segre(roots(2, 4), roots(2, 4), U, 4);
    for (int m = -4; m <= 4; ++m) {
        CHECK(rel.at(m) == s.at(m));
        TruncSeries want = m > 0 ? c(0) : m == 0 ? c(1) : U.log_coeff(-m).scaled(Rational(1 - m));
        CHECK(same.at(m) == want);
    }
}

TEST_CASE("K-theoretic relative Segre classes") {
    FormalGroupLaw M = FormalGroupLaw::multiplicative();
    int cap = 5;
    for (int k = 0; k <= 3; ++k) {
        std::vector<TruncSeries> f;
        for (int j = 1; j <= k; ++j) f.push_back(sf::formal_inverse(M, b(j, cap)));
        auto got = sf::relative_segre(roots(2, cap), f, M, cap);
        auto want = sf::one_row_series(sf::OneRow::G, k, 2, sf::BSequence{}, cap);
        for (int m = -cap; m <= cap; ++m) CHECK(got.at(m) == want.at(m));
    }
}

TEST_CASE("push-forward examples") {
    for (auto f : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative()})
        for (int n = 1; n <= 3; ++n) CHECK(sf::dp_pushforward(x(1, 5).pow(n - 1), n, 1, f, 5) == c(1));
    // with the universal law x^{n-1} pushes forward to S_0, which is not 1
    FormalGroupLaw U = FormalGroupLaw::universal();
    auto s = sf::segre_series(roots(2, 4), U, 4);
    CHECK(sf::dp_pushforward(x(1, 4), 2, 1, U, 4) == s.at(0));
    CHECK(s.at(0) != c(1, 1, 4));
    for (int m = 1; m <= 3; ++m) CHECK(sf::dp_pushforward(x(1, 4).pow(1 + m), 2, 1, U, 4) == s.at(m));

    FormalGroupLaw A = FormalGroupLaw::additive();
    CHECK(sf::dp_pushforward(monomial_x({3, 1}, 6), 2, 2, A, 6) == x(1).pow(2) * x(2) + x(1) * x(2).pow(2));
    CHECK(sf::dp_pushforward(c(1, 1, 4), 3, 0, U, 4) == c(1));
    CHECK_THROWS(sf::dp_pushforward(x(3, 4), 3, 2, U, 4));
}

TEST_CASE("push-forward matches the symmetrizer") {
    for (auto f : {FormalGroupLaw::additive(), FormalGroupLaw::universal()})
        for (int r = 1; r <= 2; ++r)
            for (auto e : std::vector<std::vector<int>>{{0, 0}, {2, 1}, {1, 3}, {3, 3}}) {
                e.resize(static_cast<std::size_t>(r));
                int cap = 5, L = sf::symmetrizer_length(3, r);
                TruncSeries mono = monomial_x(e, cap + L);
                CAPTURE(f.name());
                CAPTURE(r);
                CAPTURE(mono.str());
                CHECK(sf::dp_pushforward(mono, 3, r, f, cap) == sf::gysin_symmetrize(mono, 3, r, f));
            }
}

TEST_CASE("generating-function examples") {
    FormalGroupLaw A = FormalGroupLaw::additive();
    CHECK(sf::gf_coefficient(spec(Family::S_KL, Partition(), 3, true, FormalGroupLaw::universal())) == c(1));
    CHECK(sf::gf_coefficient(spec(Family::S_KL, Partition({2, 1}), 2, false, A)) == x(1).pow(2) * x(2) + x(1) * x(2).pow(2));
    CHECK(sf::gf_coefficient(spec(Family::HQ, Partition({1}), 3, true, A)) == (c(1) - t()) * (x(1) + x(2) + x(3)));
    for (int n = 1; n <= 4; ++n) {
        TruncSeries geo = c(0);
        for (int k = 0; k < n; ++k) geo = geo + t().pow(k);
        TruncSeries sx = c(0);
        for (int i = 1; i <= n; ++i) sx = sx + x(i);
        CHECK(sf::gf_coefficient(spec(Family::HP, Partition({1}), n, true, A)) == sx + b(1) * geo);
    }
    FamilySpec s = spec(Family::HP, Partition({1, 1}), 2, true, A);
    CHECK(sf::gf_coefficient(s) == sf::eval_family(s));
    CHECK_THROWS(sf::gf_coefficient(spec(Family::S_UF, Partition({1}), 2, false, A)));
}

TEST_CASE("factorial HP forms agree with their symmetrizer counterparts") {
    for (auto f : {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative(), FormalGroupLaw::universal()})
        for (auto& lam : sf::partitions_up_to(2, 2)) {
            FamilySpec s = spec(Family::HP, lam, 2, true, f, lam.weight() + 3);
            CHECK(sf::gf_coefficient(s) == sf::eval_family(s));
            FamilySpec shifted = s;
            shifted.b = sf::shift_b(s.b);
            CHECK(sf::gf_coefficient_shifted(s) == sf::eval_family(shifted));
        }
}

TEST_CASE("b = 0 factorial HP reduces to the plain form") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    std::map<VarId, TruncSeries> z;
    for (int j = 1; j <= 12; ++j) z.emplace(VarId::b(j), c(0));
    for (auto& lam : sf::partitions_up_to(2, 2)) {
        TruncSeries fact = sf::gf_coefficient(spec(Family::HP, lam, 2, true, U, 4));
        CHECK(sf::substitute(fact, z) == sf::gf_coefficient(spec(Family::HP, lam, 2, false, U, 4)));
    }
}

TEST_CASE("one-variable HQ factor recovers the classical q_r generating function") {
    // prod (1 - t x_j u) / (1 - x_j u) = sum_r q_r u^r
    FormalGroupLaw A = FormalGroupLaw::additive();
    sf::GfRequest req;
    req.kind = sf::GfKind::HQ;
    req.n = 2;
    req.target = {1};
    req.fgl = A;
    req.cap = 3;
    CHECK(sf::gf_extract(req) == (c(1) - t()) * (x(1) + x(2)));
    req.target = {2};
    TruncSeries q2 = (c(1) - t()) * (x(1).pow(2) + x(2).pow(2) + x(1) * x(2)) - (c(1) - t()) * t() * x(1) * x(2);
    CHECK(sf::gf_extract(req) == q2);
}

TEST_CASE("two-variable extraction") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    sf::GfRequest req;
    req.kind = sf::GfKind::KL;
    req.n = 3;
    req.fgl = U;
    req.cap = 5;
    req.target = {2, 1};
    TruncSeries v = sf::gf_extract(req);
    CHECK(v == sf::eval_family(spec(Family::S_KL, Partition({2, 1}), 3, false, U, 5)));
}

TEST_CASE("request errors") {
    sf::GfRequest req;
    req.n = 5;
    req.target = {1, 1, 1, 1, 1};
    req.cap = 6;
    CHECK_THROWS_AS(sf::gf_extract(req), sf::RankError);
    req.target = {1};
    req.cap = sf::kNoCap;
    CHECK_THROWS_AS(sf::gf_extract(req), sf::InfiniteCap);
}
