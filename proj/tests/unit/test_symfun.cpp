#include "helpers.hpp"

#include "symfun/monomial.hpp"
#include "symfun/symfun.hpp"

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

TruncSeries sum_x(int n) {
    TruncSeries s;
    for (int i = 1; i <= n; ++i) s = s + x(i);
    return s;
}

TruncSeries kill_b(const TruncSeries& s) {
    std::map<VarId, TruncSeries> z;
    for (int j = 1; j <= 12; ++j) z.emplace(VarId::b(j), c(0));
    return sf::substitute(s, z);
}

}  // namespace

TEST_CASE("partitions") {
    CHECK(Partition::parse("").empty());
    CHECK(Partition::parse("3,1,0,0") == Partition({3, 1}));
    CHECK(Partition({3, 1}).is_strict());
    CHECK_FALSE(Partition({2, 2}).is_strict());
    CHECK(Partition::rho(3) == Partition({3, 2, 1}));
    CHECK(Partition({2, 1}) + Partition({1, 1, 1}) == Partition({3, 2, 1}));
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
    CHECK(sf::partitions_of(4).size() == 5);
    CHECK(sf::strict_partitions_up_to(6).size() == 14);
}

TEST_CASE("factorial powers") {
    FormalGroupLaw A = FormalGroupLaw::additive(), M = FormalGroupLaw::multiplicative();
    CHECK(sf::factorial_power(1, 0, A, true, 6) == c(1));
    CHECK(sf::factorial_power(1, 2, A, true, 6) == (x(1) + b(1)) * (x(1) + b(2)));
    CHECK(sf::factorial_power(1, 3, M, false, 6) == x(1).pow(3));
    CHECK(sf::double_power(1, 1, A, false, 6) == x(1).scaled(Rational(2)));
    CHECK(sf::double_power(1, 2, A, true, 6) == x(1).scaled(Rational(2)) * (x(1) + b(1)));
    CHECK(sf::double_power(1, 1, M, false, 6) == x(1).scaled(Rational(2)) + beta() * x(1).pow(2));
    CHECK(sf::hl_power(1, 3, A, 6) == (c(1) - t()) * x(1).pow(3));
    for (auto f : {A, M, FormalGroupLaw::universal()}) {
        CHECK(sf::substitute(sf::hl_power(1, 2, f, 6), {{VarId::t(), c(0)}}) == x(1, 6).pow(2));
        CHECK(sf::substitute(sf::hl_fact_power(1, 3, f, true, 6), {{VarId::t(), c(-1)}}) == sf::double_power(1, 3, f, true, 6));
    }
}

TEST_CASE("parameter sequence shifts") {
    sf::BSequence seq;
    CHECK(seq.shifted().source_index(1) == 0);
    CHECK(seq.shifted().source_index(3) == 2);
    CHECK(seq.shifted().shifted().source_index(2) == 0);
    CHECK(seq.shifted().at(3, 5) == b(2));
}

TEST_CASE("symmetrizer basics") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    CHECK(sf::gysin_symmetrize(c(1, 1, 5), 3, 0, U) == c(1));
    FormalGroupLaw A = FormalGroupLaw::additive();
    TruncSeries s = sf::eval_family(spec(Family::S_KL, Partition({2, 1}), 3, false, A));
    TruncSeries want = x(1).pow(2) * x(2) + x(1).pow(2) * x(3) + x(2).pow(2) * x(1) + x(2).pow(2) * x(3) +
                       x(3).pow(2) * x(1) + x(3).pow(2) * x(2) + (x(1) * x(2) * x(3)).scaled(Rational(2));
    CHECK(s == want);
}

TEST_CASE("worked examples") {
    FormalGroupLaw A = FormalGroupLaw::additive(), U = FormalGroupLaw::universal();
    for (int n = 1; n <= 3; ++n) CHECK(sf::eval_family(spec(Family::S_KL, Partition(), n, true, U)) == c(1));
    TruncSeries hp = sf::eval_family(spec(Family::HP, Partition({1}), 3, true, A));
    CHECK(hp == sum_x(3) + b(1) * (c(1) + t() + t() * t()));
    for (int n = 1; n <= 4; ++n) CHECK(sf::eval_family(spec(Family::HQ, Partition({1}), n, true, A)) == (c(1) - t()) * sum_x(n));

    // (k,k) on two variables: the two-term expression, with denominators cleared
    for (int k = 1; k <= 2; ++k) {
        int cap = 2 * k + 5;
        TruncSeries S = sf::eval_family(spec(Family::S_KL, Partition({k, k}), 2, true, U, cap));
        TruncSeries d12 = sf::formal_difference(U, x(1, cap), x(2, cap)), d21 = sf::formal_difference(U, x(2, cap), x(1, cap));
        auto fp = [&](int i, int e) { return sf::factorial_power(i, e, U, true, cap); };
        CHECK(S * d12 * d21 == fp(1, k + 1) * fp(2, k) * d21 + fp(2, k + 1) * fp(1, k) * d12);
    }
}

TEST_CASE("Kempf-Laksov classes") {
    FormalGroupLaw A = FormalGroupLaw::additive();
    CHECK(sf::kl_class(Partition(), 2, 3, A, 4) == c(1));
    CHECK(kill_b(sf::kl_class(Partition({1}), 1, 2, A, 3)) == x(1));
}

TEST_CASE("validation") {
    FormalGroupLaw A = FormalGroupLaw::additive();
    CHECK_THROWS_AS(sf::eval_family(spec(Family::P, Partition({2, 2}), 3, false, A)), sf::StrictnessError);
    CHECK_THROWS_AS(sf::eval_family(spec(Family::S_KL, Partition({1, 1, 1}), 2, false, A)), sf::RankError);
    CHECK(sf::parse_family("hq") == Family::HQ);
    CHECK_THROWS(sf::parse_family("xyz"));
    FamilySpec s = spec(Family::P, Partition({2, 1}), 3, false, A);
    s.t_on = true;
    CHECK(s.effective_family() == Family::HP);
}

TEST_CASE("outputs are symmetric") {
    std::vector<std::vector<int>> perms = {{2, 1, 3}, {1, 3, 2}, {3, 1, 2}};
    for (auto f : {FormalGroupLaw::multiplicative(), FormalGroupLaw::universal()})
        for (Family fam : {Family::S_KL, Family::S_UF, Family::P, Family::HQ})
            for (bool factorial : {false, true}) {
                TruncSeries v = sf::eval_family(spec(fam, Partition({2, 1}), 3, factorial, f, 5));
                for (auto& w : perms) CHECK(sf::act_permutation(v, w) == v);
            }
}

TEST_CASE("universal values are graded") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    for (auto& lam : sf::partitions_up_to(3, 2)) {
        TruncSeries v = sf::eval_family(spec(Family::S_KL, lam, 2, false, U, lam.weight() + 4));
        for (auto& term : v.terms()) {
            int deg = 0;
            for (auto& [var, e] : term.mono.entries()) {
                if (var.kind == sf::VarKind::X) deg += e;
                if (var.kind == sf::VarKind::M) deg -= var.index * e;
            }
            CHECK(deg == lam.weight());
        }
    }
}

TEST_CASE("full and coset forms of P and Q agree") {
    for (auto f : {FormalGroupLaw::additive(), FormalGroupLaw::universal()})
        for (Family fam : {Family::P, Family::Q})
            for (bool factorial : {false, true}) {
                FamilySpec s = spec(fam, Partition({2, 1}), 3, factorial, f, 6);
                CHECK(sf::eval_pq_full_form(s) == sf::eval_family(s));
            }
}

TEST_CASE("S_UF and the empty-partition factor") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    CHECK(sf::empty_uf(1, 0, U, true, 4) == c(1));
    CHECK(sf::empty_uf(2, 0, U, false, 4) != c(1, 1, 4));
    for (auto& lam : sf::partitions_up_to(2, 3))
        CHECK(sf::uf_via_kl_difference(lam, 3, U, true, 5) == sf::eval_family(spec(Family::S_UF, lam, 3, true, U, 5)));
}
