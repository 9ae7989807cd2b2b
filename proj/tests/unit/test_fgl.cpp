#include "helpers.hpp"

#include "symfun/fgl.hpp"

using namespace testing_helpers;
using sf::FormalGroupLaw;

namespace {

std::vector<FormalGroupLaw> all_laws() {
    return {FormalGroupLaw::additive(), FormalGroupLaw::multiplicative(), FormalGroupLaw::universal(),
            FormalGroupLaw::custom({c(1, 2), c(-1, 3), c(2), c(0), c(5, 7)})};
}

}  // namespace

TEST_CASE("formal sums of the standard laws") {
    CHECK(sf::formal_sum(FormalGroupLaw::additive(), x(1, 5), x(2, 5)) == x(1) + x(2));
    CHECK(sf::formal_sum(FormalGroupLaw::multiplicative(), x(1, 5), x(2, 5)) == x(1) + x(2) + beta() * x(1) * x(2));
    TruncSeries u = sf::formal_sum(FormalGroupLaw::universal(), x(1, 2), x(2, 2));
    CHECK(u == x(1) + x(2) - (m(1) * x(1) * x(2)).scaled(Rational(2)));
}

TEST_CASE("formal inverses") {
    CHECK(sf::formal_inverse(FormalGroupLaw::additive(), x(1, 4)) == -x(1));
    TruncSeries mi = sf::formal_inverse(FormalGroupLaw::multiplicative(), x(1, 4));
    CHECK(mi == -x(1) + beta() * x(1).pow(2) - beta().pow(2) * x(1).pow(3) + beta().pow(3) * x(1).pow(4));
    FormalGroupLaw U = FormalGroupLaw::universal();
    TruncSeries ui = sf::formal_inverse(U, x(1, 2));
    CHECK(ui == -x(1) - (m(1) * x(1).pow(2)).scaled(Rational(2)));
    CHECK(sf::formal_sum(U, x(1, 2), ui).is_zero());
}

TEST_CASE("t-series") {
    CHECK(sf::t_series(FormalGroupLaw::additive(), x(1, 4), t()) == t() * x(1));
    for (auto& f : all_laws()) {
        CHECK(sf::t_series(f, x(1, 6), c(2)) == sf::formal_sum(f, x(1, 6), x(1, 6)));
        CHECK(sf::t_series(f, x(1, 6), c(-1)) == sf::formal_inverse(f, x(1, 6)));
    }
}

TEST_CASE("P(z) and 1/P(z)") {
    CHECK(sf::p_series(FormalGroupLaw::additive(), 6) == c(1));
    TruncSeries z = TruncSeries::variable(VarId::u(1));
    CHECK(sf::p_series(FormalGroupLaw::multiplicative(), 6) == c(1) + beta() * z);
    TruncSeries inv = sf::inv_p_series(FormalGroupLaw::universal(), 4);
    CHECK(inv == c(1) + (m(1) * z).scaled(Rational(2)) + (m(2) * z.pow(2)).scaled(Rational(3)) +
                     (m(3) * z.pow(3)).scaled(Rational(4)) + (m(4) * z.pow(4)).scaled(Rational(5)));
}

TEST_CASE("specialization of universal values") {
    FormalGroupLaw U = FormalGroupLaw::universal(), A = FormalGroupLaw::additive(), M = FormalGroupLaw::multiplicative();
    CHECK(sf::fgl_specialize(sf::formal_sum(U, x(1, 5), x(2, 5)), A) == x(1) + x(2));
    CHECK(sf::fgl_specialize(sf::formal_inverse(U, x(1, 5)), M) == sf::formal_inverse(M, x(1, 5)));
    CHECK(sf::fgl_specialize(m(1), M) == beta().scaled(Rational(-1, 2)));
    CHECK(M.log_coeff(3) == beta().pow(3).scaled(Rational(-1, 4)));
}

TEST_CASE("specialization is a homomorphism") {
    FormalGroupLaw U = FormalGroupLaw::universal();
    std::mt19937_64 rng(23);
    for (auto& target : all_laws()) {
        for (int trial = 0; trial < 3; ++trial) {
            TruncSeries a = random_series(rng, 6, 3, 6) - c(0), p = random_series(rng, 6, 3, 6);
            a = (a - TruncSeries::constant(a.constant_term())).truncate(6);
            p = (p - TruncSeries::constant(p.constant_term())).truncate(6);
            TruncSeries ua = a * m(1) + a, up = p * m(2) - p;
            CHECK(sf::fgl_specialize(ua * up, target) == sf::fgl_specialize(ua, target) * sf::fgl_specialize(up, target));
            CHECK(sf::fgl_specialize(sf::formal_sum(U, a, p), target) == sf::formal_sum(target, a, p));
            CHECK(sf::fgl_specialize(sf::logarithm(U, a), target) == sf::logarithm(target, a));
        }
    }
}

TEST_CASE("axioms for every law") {
    int cap = 7;
    for (auto& f : all_laws()) {
        CAPTURE(f.name());
        TruncSeries a = x(1, cap), p = x(2, cap), q = x(3, cap);
        CHECK(sf::formal_sum(f, a, TruncSeries(cap)) == a);
        CHECK(sf::formal_sum(f, a, p) == sf::formal_sum(f, p, a));
        CHECK(sf::formal_sum(f, sf::formal_sum(f, a, p), q) == sf::formal_sum(f, a, sf::formal_sum(f, p, q)));
        CHECK(sf::logarithm(f, sf::formal_sum(f, a, p)) == sf::logarithm(f, a) + sf::logarithm(f, p));
        CHECK(sf::logarithm(f, sf::exponential(f, a)) == a);
        CHECK(sf::logarithm(f, a).component(1) == a);
        for (int k = -3; k <= 3; ++k) CHECK(sf::logarithm(f, sf::t_series(f, a, c(k))) == sf::logarithm(f, a).scaled(Rational(k)));
        CHECK(sf::inv_p_series(f, cap) * sf::p_series(f, cap) == c(1, 1, cap));
    }
}

TEST_CASE("custom laws reject non-scalar coefficients") {
    CHECK_THROWS(FormalGroupLaw::custom({x(1)}));
    CHECK_THROWS(FormalGroupLaw::from_name("no-such-law"));
}
