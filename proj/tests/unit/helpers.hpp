#pragma once

#include <random>

#include "doctest.h"
#include "symfun/series.hpp"

namespace testing_helpers {

using sf::Rational;
using sf::TruncSeries;
using sf::VarId;

inline TruncSeries x(int i, int cap = sf::kNoCap) { return TruncSeries::variable(VarId::x(i), cap); }
inline TruncSeries b(int i, int cap = sf::kNoCap) { return TruncSeries::variable(VarId::b(i), cap); }
inline TruncSeries t() { return TruncSeries::variable(VarId::t()); }
inline TruncSeries beta() { return TruncSeries::variable(VarId::beta()); }
inline TruncSeries m(int i) { return TruncSeries::variable(VarId::m(i)); }
inline TruncSeries c(std::int64_t p, std::int64_t q = 1, int cap = sf::kNoCap) {
    return TruncSeries::constant(Rational(p, q), cap);
}

// Random polynomial in x1..x3 (and t when with_t) with small rational coefficients.
inline TruncSeries random_series(std::mt19937_64& rng, int terms, int max_deg, int cap, bool with_t = false) {
    std::uniform_int_distribution<int> e(0, max_deg), var(1, 3), num(-5, 5), den(1, 3), coin(0, 1);
    TruncSeries s(cap);
    for (int k = 0; k < terms; ++k) {
        TruncSeries term = c(num(rng), den(rng), cap);
        for (int d = e(rng); d > 0; --d) term = term * x(var(rng), cap);
        if (with_t && coin(rng)) term = term * t();
        s = s + term;
    }
    return s;
}

}  // namespace testing_helpers

namespace doctest {
template <>
struct StringMaker<sf::TruncSeries> {
    static String convert(const sf::TruncSeries& s) { return s.str().c_str(); }
};
template <>
struct StringMaker<sf::Rational> {
    static String convert(const sf::Rational& r) { return r.str().c_str(); }
};
}  // namespace doctest
