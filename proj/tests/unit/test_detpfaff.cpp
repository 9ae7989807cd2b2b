#include "helpers.hpp"

#include "symfun/detpfaff.hpp"
#include "symfun/oracles.hpp"

using namespace testing_helpers;
using sf::FormalGroupLaw;
using sf::OneRow;
using sf::Partition;

namespace {

sf::FamilySpec spec(sf::Family f, Partition lam, int n, bool factorial, FormalGroupLaw fgl, int cap) {
    sf::FamilySpec s;
    s.family = f;
    s.lambda = std::move(lam);
    s.n = n;
    s.factorial = factorial;
    s.fgl = std::move(fgl);
    s.cap = cap;
    return s;
}

TruncSeries h(int l, int n, int cap) { return sf::one_row_series(OneRow::H, 0, n, {}, cap).at(l); }

TruncSeries strip_beta(const TruncSeries& s) { return sf::substitute(s, {{VarId::beta(), c(0)}}); }

}  // namespace

TEST_CASE("determinants") {
    sf::SquareMatrix one(1);
    one.at(0, 0) = x(1);
    CHECK(sf::det(one) == x(1));
    sf::SquareMatrix id(4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = c(1);
    CHECK(sf::det(id) == c(1));
    sf::SquareMatrix jt(2);
    jt.at(0, 0) = h(2, 2, 4);
    jt.at(0, 1) = h(3, 2, 4);
    jt.at(1, 0) = h(0, 2, 4);
    jt.at(1, 1) = h(1, 2, 4);
    CHECK(sf::det(jt) == x(1).pow(2) * x(2) + x(1) * x(2).pow(2));
}

TEST_CASE("pfaffians") {
    sf::SkewMatrix two(2);
    two.set(0, 1, x(1));
    CHECK(sf::pfaffian(two) == x(1));
    sf::SkewMatrix four(4);
    TruncSeries a12 = x(1), a13 = x(2), a14 = x(3), a23 = b(1), a24 = b(2), a34 = b(3);
    four.set(0, 1, a12);
    four.set(0, 2, a13);
    four.set(0, 3, a14);
    four.set(1, 2, a23);
    four.set(1, 3, a24);
    four.set(2, 3, a34);
    TruncSeries pf = sf::pfaffian(four);
    CHECK(pf == a12 * a34 - a13 * a24 + a14 * a23);
    CHECK(pf * pf == sf::det(four));
    CHECK_THROWS_AS(sf::pfaffian(sf::SkewMatrix(3)), sf::OddDimension);
    sf::SkewMatrix bad(2);
    bad.at(0, 1) = x(1);
    CHECK_THROWS_AS(bad.check(), sf::NotSkew);
}

TEST_CASE("random skew matrices satisfy Pf^2 = det") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 5; ++trial) {
        sf::SkewMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) m.set(i, j, random_series(rng, 3, 2, sf::kNoCap));
        TruncSeries pf = sf::pfaffian(m);
        CHECK(pf * pf == sf::det(m));
    }
}

TEST_CASE("generalized binomials") {
    CHECK(sf::gen_binomial(5, 2) == Rational(10));
    CHECK(sf::gen_binomial(-1, 3) == Rational(-1));
    CHECK(sf::gen_binomial(-2, 2) == Rational(3));
    CHECK(sf::gen_binomial(2, 3) == Rational(0));
    CHECK(sf::gen_binomial(7, 0) == Rational(1));
}

TEST_CASE("one-row series") {
    int cap = 4;
    CHECK(h(0, 2, cap) == c(1));
    CHECK(h(2, 2, cap) == x(1).pow(2) + x(1) * x(2) + x(2).pow(2));
    for (int k = 0; k <= 3; ++k) CHECK(sf::one_row_series(OneRow::H, k, 2, {}, cap).at(0) == c(1));
    CHECK(sf::one_row_series(OneRow::H, 2, 2, {}, cap).at(1) == x(1) + x(2) + b(1) + b(2));
    // h_k(x_n|b) = s_(k)(x_n|b)
    FormalGroupLaw A = FormalGroupLaw::additive();
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            CHECK(sf::one_row_series(OneRow::H, k - 1 + n, n, {}, k + n).at(k) ==
                  sf::eval_family(spec(sf::Family::S_KL, Partition({k}), n, true, A, k + n)));
}

TEST_CASE("Jacobi-Trudi") {
    CHECK(sf::jacobi_trudi_schur(Partition(), 3, true, {}, 4) == c(1));
    CHECK(sf::jacobi_trudi_schur(Partition({2, 1}), 2, false, {}, 5) == x(1).pow(2) * x(2) + x(1) * x(2).pow(2));
    CHECK(sf::jacobi_trudi_schur(Partition({1}), 2, true, {}, 3) == x(1) + x(2) + b(1) + b(2));
    for (auto& lam : sf::partitions_up_to(4, 3)) {
        TruncSeries tab = sf::oracle::schur_tableaux(lam, 3).to_series();
        CHECK(sf::jacobi_trudi_schur(lam, 3, false, {}, lam.weight() + 3) == tab);
        CHECK(sf::jacobi_trudi_schur(lam, 3, false, {}, lam.weight() + 3, sf::JtVariant::Shifted) == tab);
    }
}

TEST_CASE("Grothendieck determinants") {
    FormalGroupLaw M = FormalGroupLaw::multiplicative();
    CHECK(sf::grothendieck_det(Partition({1}), 1, false, {}, 4) == sf::eval_family(spec(sf::Family::S_KL, Partition({1}), 1, false, M, 4)));
    CHECK(sf::grothendieck_det(Partition({2, 1}), 2, false, {}, 6) ==
          sf::eval_family(spec(sf::Family::S_KL, Partition({2, 1}), 2, false, M, 6)));
    for (auto& lam : sf::partitions_up_to(3, 2))
        for (bool factorial : {false, true})
            CHECK(strip_beta(sf::grothendieck_det(lam, 2, factorial, {}, lam.weight() + 3)) ==
                  sf::jacobi_trudi_schur(lam, 2, factorial, {}, lam.weight() + 3));
}

TEST_CASE("Q Pfaffians") {
    TruncSeries q21 = sf::q_pfaffian(Partition({2, 1}), 2, false, {}, 5);
    CHECK(q21 == (x(1) * x(2)).scaled(Rational(4)) * (x(1) + x(2)));
    CHECK(sf::q_pfaffian(Partition({1}), 3, false, {}, 4) == (x(1) + x(2) + x(3)).scaled(Rational(2)));
    CHECK(sf::q_pfaffian(Partition(), 3, true, {}, 4) == c(1));
    for (auto& nu : sf::strict_partitions_up_to(5, 3))
        CHECK(sf::q_pfaffian(nu, 3, false, {}, nu.weight() + 3) == sf::oracle::schur_q(nu, 3).to_series());
}

TEST_CASE("GQ Pfaffians") {
    FormalGroupLaw M = FormalGroupLaw::multiplicative();
    for (bool factorial : {false, true}) {
        TruncSeries gq = sf::gq_pfaffian(Partition({2, 1}), 2, factorial, {}, 6);
        CHECK(gq == sf::eval_family(spec(sf::Family::Q, Partition({2, 1}), 2, factorial, M, 6)));
        CHECK(strip_beta(gq) == sf::q_pfaffian(Partition({2, 1}), 2, factorial, {}, 6));
    }
    sf::SkewMatrix m = sf::gq_matrix(Partition({3, 2, 1}), 3, true, {}, 9);
    CHECK_NOTHROW(m.check());
    TruncSeries pf = sf::pfaffian(m).truncate(9);
    CHECK(pf * pf == sf::det(m));
    CHECK_THROWS_AS(sf::q_pfaffian(Partition({2, 2}), 3, false, {}, 5), sf::NotStrict);
}
