#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "symfun/monomial.hpp"
#include "symfun/rational.hpp"

namespace sf {

// Cap value meaning "no truncation" (pure polynomial mode).
inline constexpr int kNoCap = INT_MAX;

struct Term {
    Monomial mono;
    Rational coeff;
};

struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};
struct InfiniteCap : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Sparse exact series over Q, truncated at a geometric-weight cap.
// Terms are kept in canonical order with no zero coefficients.
class TruncSeries {
public:
    explicit TruncSeries(int cap = kNoCap) : cap_(cap) {}
    TruncSeries(std::vector<Term> terms, int cap);

    // Terms must already be canonical, nonzero and within cap.
    static TruncSeries from_canonical(std::vector<Term> terms, int cap);
    static TruncSeries constant(const Rational& c, int cap = kNoCap);
    static TruncSeries variable(VarId v, int cap = kNoCap);
    static TruncSeries monomial(const Monomial& m, const Rational& c, int cap = kNoCap);

    int cap() const { return cap_; }
    bool finite_cap() const { return cap_ != kNoCap; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial()); }
    // -1 for the zero series.
    int min_weight() const;
    int max_weight() const;
    int degree_in(VarId v) const;
    bool mentions(VarKind k) const;

    TruncSeries truncate(int cap) const;
    // Same terms with a different cap label; the caller guarantees validity.
    TruncSeries with_cap(int cap) const;
    // Homogeneous component of geometric weight w.
    TruncSeries component(int w) const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const TruncSeries& o);
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rational& c) const;
    TruncSeries times_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
    TruncSeries pow(int e) const;

    // Equality of term maps at the common cap.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }
    // Equality of term maps and caps.
    bool identical(const TruncSeries& o) const;

    std::string str() const;

private:
    friend class SeriesBuilder;
    std::vector<Term> terms_;
    int cap_;
};

// Accumulates terms by monomial, then emits a canonical TruncSeries.
class SeriesBuilder {
public:
    explicit SeriesBuilder(int cap, std::size_t reserve = 0);
    ~SeriesBuilder();
    SeriesBuilder(const SeriesBuilder&) = delete;
    SeriesBuilder& operator=(const SeriesBuilder&) = delete;
    void add(const Monomial& m, const Rational& c);
    void add_mul(const Monomial& m, const Rational& a, const Rational& b);
    void add(const TruncSeries& s, const Rational& scale = Rational(1));
    TruncSeries build();

private:
    struct Impl;
    Impl* impl_;
    int cap_;
};

TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
// Adds scale * a * b to acc, keeping weights up to cap and ignoring the operands' own caps.
void mul_accumulate(SeriesBuilder& acc, const TruncSeries& a, const TruncSeries& b, int cap,
                    const Rational& scale = Rational(1));
TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries invert_unit(const TruncSeries& a);
// Quotient q with den * q = num; q carries cap num.cap() - (lowest weight of den).
TruncSeries exact_divide(const TruncSeries& num, const TruncSeries& den);
TruncSeries substitute(const TruncSeries& a, const std::map<VarId, TruncSeries>& assignment);
// w[i-1] is the image of i; renames x_i to x_{w(i)}.
TruncSeries act_permutation(const TruncSeries& a, const std::vector<int>& w);

}  // namespace sf
