#include "helpers.hpp"

#include "symfun/oracles.hpp"

using namespace testing_helpers;
using sf::Partition;
namespace o = sf::oracle;

namespace {

o::Poly sum_x(int n) {
    o::Poly s;
    for (int i = 1; i <= n; ++i) s = s + o::Poly::x(i);
    return s;
}

o::Poly one_minus_t() { return o::Poly::constant(1) - o::Poly::t(); }

}  // namespace

TEST_CASE("tableau Schur polynomials") {
    CHECK(o::schur_tableaux(Partition(), 3) == o::Poly::constant(1));
    CHECK(o::schur_tableaux(Partition({1}), 4) == sum_x(4));
    o::Poly s21 = o::schur_tableaux(Partition({2, 1}), 3);
    mpq_class total = 0;
    for (auto& [e, cf] : s21.terms()) total += cf;
    CHECK(total == 8);
    CHECK(s21.terms().size() == 7);
}

TEST_CASE("bialternants") {
    for (auto& lam : sf::partitions_up_to(5, 4))
        for (int n = std::max(1, lam.length()); n <= 4; ++n) CHECK(o::schur_bialternant(lam, n) == o::schur_tableaux(lam, n));
    CHECK(o::factorial_schur_bialternant(Partition(), 3) == o::Poly::constant(1));
    CHECK(o::factorial_schur_bialternant(Partition({1}), 2) == o::Poly::x(1) + o::Poly::x(2) - o::Poly::a(1) - o::Poly::a(2));
}

TEST_CASE("normalization polynomials") {
    CHECK(o::phi(2) == one_minus_t() * (o::Poly::constant(1) - o::Poly::t().pow(2)));
    CHECK(o::v_poly(2) == o::Poly::constant(1) + o::Poly::t());
    CHECK(o::b_lambda(Partition({2, 1})) == one_minus_t().pow(2));
    CHECK(o::v_lambda(Partition({1, 1}), 3) == o::Poly::constant(1) + o::Poly::t());
}

TEST_CASE("classical Hall-Littlewood polynomials") {
    CHECK(o::hl_classical(Partition({1}), 3, o::HLKind::Q) == one_minus_t() * sum_x(3));
    for (auto& lam : sf::partitions_up_to(4, 3)) {
        o::Poly p = o::hl_classical(lam, 3, o::HLKind::P);
        CHECK(o::hl_classical(lam, 3, o::HLKind::Q) == o::b_lambda(lam) * p);
        CHECK(p.at_t(0) == o::schur_tableaux(lam, 3));
        CHECK(o::hl_classical(lam, 3, o::HLKind::Q).at_t(0) == o::schur_tableaux(lam, 3));
    }
    o::Poly q21 = o::schur_q(Partition({2, 1}), 2);
    CHECK(q21 == o::Poly::constant(4) * o::Poly::x(1) * o::Poly::x(2) * (o::Poly::x(1) + o::Poly::x(2)));
}

TEST_CASE("exact quotient and conversion") {
    o::Poly a = o::Poly::x(1) * o::Poly::x(1) - o::Poly::x(2) * o::Poly::x(2);
    CHECK(exact_quotient(a, o::Poly::x(1) - o::Poly::x(2)) == o::Poly::x(1) + o::Poly::x(2));
    CHECK_THROWS(exact_quotient(o::Poly::x(1) * o::Poly::x(2), o::Poly::x(1) - o::Poly::x(2)));
    CHECK((o::Poly::x(1) - o::Poly::a(2)).to_series() == x(1) + b(2));
    CHECK(o::Poly::t().to_series() == t());
}
