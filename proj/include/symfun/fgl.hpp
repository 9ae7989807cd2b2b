#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symfun/series.hpp"

namespace sf {

struct NonNilpotentArgument : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonScalarMultiplier : std::domain_error {
    using std::domain_error::domain_error;
};

// A formal group law over Q[m_1, m_2, ...] (or a specialization), given by its
// logarithm l(z) = z + sum_{n>=1} m_n z^{n+1}.
class FormalGroupLaw {
public:
    enum class Kind { Additive, Multiplicative, Universal, Custom };

    static FormalGroupLaw additive();
    static FormalGroupLaw multiplicative();
    static FormalGroupLaw universal();
    // m_n for n = 1..size; higher coefficients are zero. Values must have weight 0.
    static FormalGroupLaw custom(std::vector<TruncSeries> log_coeffs);
    // Parses "additive", "multiplicative", "universal" or "custom:<path>".
    static FormalGroupLaw from_name(const std::string& name);
    static FormalGroupLaw custom_from_json_file(const std::string& path);

    Kind kind() const;
    std::string name() const;

    // m_n (n >= 1).
    TruncSeries log_coeff(int n) const;
    // Coefficient of z^k in l(z), k >= 1.
    TruncSeries log_series_coeff(int k) const;
    // Coefficient of z^k in exp(z) = l^{-1}(z), k >= 1.
    TruncSeries exp_series_coeff(int k) const;
    // Coefficient a_{ij} of u^i v^j in F(u, v).
    TruncSeries a(int i, int j) const;

private:
    struct Impl;
    explicit FormalGroupLaw(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

// Sum_{k>=1} c(k) a^k for a nilpotent element of an algebra A. A must provide
// is_zero(), operator+, operator*, and scale(const TruncSeries&).
template <class A, class Coeff>
A compose_series(Coeff&& c, const A& a) {
    A result = a.zero_like();
    A p = a;
    for (int k = 1; !p.is_zero(); ++k) {
        TruncSeries ck = c(k);
        if (!ck.is_zero()) result = result + p.scale(ck);
        p = p * a;
    }
    return result;
}

// Algebra adaptor so TruncSeries can be used with compose_series.
struct SeriesAlg {
    TruncSeries v;
    bool is_zero() const { return v.is_zero(); }
    SeriesAlg zero_like() const { return {TruncSeries(v.cap())}; }
    SeriesAlg scale(const TruncSeries& c) const { return {mul(v, c)}; }
    friend SeriesAlg operator+(const SeriesAlg& a, const SeriesAlg& b) { return {a.v + b.v}; }
    friend SeriesAlg operator*(const SeriesAlg& a, const SeriesAlg& b) { return {a.v * b.v}; }
};

template <class A>
A fgl_log(const FormalGroupLaw& f, const A& a) {
    return compose_series([&](int k) { return f.log_series_coeff(k); }, a);
}

template <class A>
A fgl_exp(const FormalGroupLaw& f, const A& a) {
    return compose_series([&](int k) { return f.exp_series_coeff(k); }, a);
}

template <class A>
A fgl_sum(const FormalGroupLaw& f, const A& a, const A& b) {
    switch (f.kind()) {
        case FormalGroupLaw::Kind::Additive: return a + b;
        case FormalGroupLaw::Kind::Multiplicative:
            return a + b + (a * b).scale(TruncSeries::variable(VarId::beta()));
        default: return fgl_exp(f, fgl_log(f, a) + fgl_log(f, b));
    }
}

template <class A>
A fgl_t_series(const FormalGroupLaw& f, const A& a, const TruncSeries& scalar) {
    if (f.kind() == FormalGroupLaw::Kind::Additive) return a.scale(scalar);
    if (f.kind() == FormalGroupLaw::Kind::Multiplicative) {
        // ((1 + beta a)^s - 1) / beta = sum_k binom(s, k) beta^{k-1} a^k
        TruncSeries beta = TruncSeries::variable(VarId::beta());
        std::vector<TruncSeries> coeffs{TruncSeries::constant(Rational(0))};
        TruncSeries binom = TruncSeries::constant(Rational(1));
        return compose_series(
            [&](int k) {
                while (static_cast<int>(coeffs.size()) <= k) {
                    int j = static_cast<int>(coeffs.size());
                    binom = mul(binom, scalar - TruncSeries::constant(Rational(j - 1))).scaled(Rational(1, j));
                    coeffs.push_back(j == 1 ? binom : mul(binom, beta.pow(j - 1)));
                }
                return coeffs[static_cast<std::size_t>(k)];
            },
            a);
    }
    return fgl_exp(f, fgl_log(f, a).scale(scalar));
}

template <class A>
A fgl_inverse(const FormalGroupLaw& f, const A& a) {
    if (f.kind() == FormalGroupLaw::Kind::Additive) return a.scale(TruncSeries::constant(Rational(-1)));
    if (f.kind() == FormalGroupLaw::Kind::Multiplicative) {
        // -a / (1 + beta a)
        TruncSeries mbeta = TruncSeries::variable(VarId::beta()).scaled(Rational(-1));
        return compose_series([&](int k) { return mbeta.pow(k - 1).scaled(Rational(-1)); }, a);
    }
    return fgl_exp(f, fgl_log(f, a).scale(TruncSeries::constant(Rational(-1))));
}

// TruncSeries entry points with argument checks.
TruncSeries formal_sum(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& b);
TruncSeries formal_inverse(const FormalGroupLaw& f, const TruncSeries& a);
TruncSeries formal_difference(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& b);
TruncSeries t_series(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& scalar);
TruncSeries logarithm(const FormalGroupLaw& f, const TruncSeries& a);
TruncSeries exponential(const FormalGroupLaw& f, const TruncSeries& a);
// P(z) = dF/dv(z, 0) = 1 / l'(z), as a series in the variable z.
TruncSeries p_series(const FormalGroupLaw& f, int cap, VarId z = VarId::u(1));
// 1 / P(z) = l'(z) = sum (n+1) m_n z^n.
TruncSeries inv_p_series(const FormalGroupLaw& f, int cap, VarId z = VarId::u(1));
// Image of a universal value under m_n -> target log coefficients.
TruncSeries fgl_specialize(const TruncSeries& value, const FormalGroupLaw& target);

}  // namespace sf
