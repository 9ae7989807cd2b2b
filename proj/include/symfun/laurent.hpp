#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "symfun/series.hpp"

namespace sf {

// Exponent vector of u_1..u_r (unused entries stay 0).
using LaurentKey = std::array<int, kMaxU>;

// Truncation data of a MultiLaurent expansion.
//
// Expansions live in the region x << u_1 << ... << u_r << 1. A term x^w u^e is a
// product of the small quantities x/u_1, u_1/u_2, ..., u_r with exponents
// w, P_1, ..., P_r where P_k = e_1 + ... + e_k + w. Terms are kept while every
// P_k is at most bounds[k-1] and w is at most cap.
struct LaurentShape {
    int r = 0;
    std::array<int, kMaxU> bounds{};
    int cap = 0;

    // Largest coefficient weight kept at a key; negative when the key is out of range.
    int key_cap(const LaurentKey& e) const;
    // Shape for a factor that is later multiplied by u_i^{-d}: bounds from i on grow by d.
    LaurentShape widened(int i, int d) const;
    friend bool operator==(const LaurentShape& a, const LaurentShape& b) {
        return a.r == b.r && a.bounds == b.bounds && a.cap == b.cap;
    }
};

struct RegionError : std::logic_error {
    using std::logic_error::logic_error;
};

class MultiLaurent {
public:
    explicit MultiLaurent(const LaurentShape& shape) : shape_(shape) {}

    static MultiLaurent constant(const LaurentShape& shape, const TruncSeries& c);
    static MultiLaurent u(const LaurentShape& shape, int i);
    // sum_k coeffs[k] u_i^k
    static MultiLaurent power_series(const LaurentShape& shape, int i, const std::vector<TruncSeries>& coeffs);

    // A value for a placeholder variable: either u_{u_index} or a coefficient series.
    struct Image {
        int u_index = 0;
        TruncSeries value;
        static Image of_u(int i) { return {i, TruncSeries()}; }
        static Image of(const TruncSeries& v) { return {0, v}; }
    };
    // Substitutes U1 -> a, U2 -> b in h and multiplies by u^shift.
    static MultiLaurent embed(const LaurentShape& shape, const TruncSeries& h, const Image& a, const Image& b,
                              const LaurentKey& shift = {});

    const LaurentShape& shape() const { return shape_; }
    const std::map<LaurentKey, TruncSeries>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    TruncSeries coefficient(const LaurentKey& e) const;

    MultiLaurent zero_like() const { return MultiLaurent(shape_); }
    MultiLaurent scale(const TruncSeries& c) const;
    MultiLaurent operator-() const;
    friend MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b);
    friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
    // Coefficient of u^e in a * b without forming the full product.
    friend TruncSeries product_coefficient(const MultiLaurent& a, const MultiLaurent& b, const LaurentKey& e);

    // Multiplies by u^e and re-truncates to target; throws RegionError if a term leaves the region.
    MultiLaurent shifted(const LaurentKey& e, const LaurentShape& target) const;
    // Exact division of every coefficient by d.
    MultiLaurent divide_coefficients(const TruncSeries& d) const;
    // Drops keys whose prefix sums up to k differ from the given ones.
    MultiLaurent restrict_prefix(int k, const std::vector<int>& prefix) const;
    // Keeps the keys accepted by keep.
    MultiLaurent filtered(const std::function<bool(const LaurentKey&)>& keep) const;
    // Inverse of c (1 + s) with c a nonzero rational and s nilpotent.
    MultiLaurent inverse() const;

private:
    void put(const LaurentKey& e, TruncSeries c);
    LaurentShape shape_;
    std::map<LaurentKey, TruncSeries> terms_;
};

}  // namespace sf
