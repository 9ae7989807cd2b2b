#pragma once

#include <array>
#include <gmpxx.h>
#include <map>
#include <vector>

#include "symfun/partition.hpp"
#include "symfun/series.hpp"

// Classical reference implementations for the test suites. They use their own dense-key
// polynomial type over Q and never touch formal group laws or the symmetrizer code.
namespace sf::oracle {

inline constexpr int kOx = 8;   // x_1..x_8
inline constexpr int kOa = 12;  // a_1..a_12
inline constexpr int kOvars = kOx + kOa + 1;
inline constexpr int kOt = kOx + kOa;

using Exps = std::array<int, kOvars>;

class Poly {
public:
    Poly() = default;
    static Poly constant(const mpq_class& c);
    static Poly x(int i);
    static Poly a(int i);
    static Poly t();

    const std::map<Exps, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Exps& e, const mpq_class& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend bool operator==(const Poly& p, const Poly& q) { return p.terms_ == q.terms_; }
    Poly pow(int e) const;
    // Swaps x_i and x_j.
    Poly swap_x(int i, int j) const;
    // t -> c.
    Poly at_t(const mpq_class& c) const;

    // Exact quotient (throws NotDivisible otherwise).
    friend Poly exact_quotient(const Poly& num, const Poly& den);

    // x_i -> x_i, a_j -> -b_j (sign bridge b = -a), t -> t.
    TruncSeries to_series(bool a_as_minus_b = true) const;

private:
    std::map<Exps, mpq_class> terms_;  // lexicographic on exponent arrays
};

// Sum over semistandard tableaux of shape lambda with entries in 1..n.
Poly schur_tableaux(const Partition& lambda, int n);
// det((x_j|a)^{lambda_i + n - i}) / det((x_j|a)^{n - i}), (x|a)^k = (x - a_1)...(x - a_k).
Poly factorial_schur_bialternant(const Partition& lambda, int n, bool factorial = true);
// Ordinary bialternant (a = 0).
inline Poly schur_bialternant(const Partition& lambda, int n) { return factorial_schur_bialternant(lambda, n, false); }

enum class HLKind { P, Q };

// Normalization polynomials in t.
Poly phi(int m);                              // prod_{i<=m} (1 - t^i)
Poly v_poly(int m);                           // phi(m) / (1-t)^m
Poly b_lambda(const Partition& lambda);       // prod_i phi(m_i)
Poly v_lambda(const Partition& lambda, int n);  // prod_{i>=0} v(m_i), m_0 = n - l(lambda)

// Hall-Littlewood P or Q via the antisymmetrized numerator
// sum_w sgn(w) w(x^lambda prod_{i<j} (x_i - t x_j)) / Vandermonde / v_lambda(t).
Poly hl_classical(const Partition& lambda, int n, HLKind kind);
// Schur Q-polynomial: hl_classical Q at t = -1.
Poly schur_q(const Partition& nu, int n);

}  // namespace sf::oracle
