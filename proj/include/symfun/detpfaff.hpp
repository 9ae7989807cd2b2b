#pragma once

#include <map>
#include <vector>

#include "symfun/genfun.hpp"

namespace sf {

struct OddDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSkew : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
using NotStrict = StrictnessError;

struct SquareMatrix {
    int dim = 0;
    std::vector<TruncSeries> entries;  // row-major

    explicit SquareMatrix(int d = 0) : dim(d), entries(static_cast<std::size_t>(d * d)) {}
    TruncSeries& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
    const TruncSeries& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
};

struct SkewMatrix : SquareMatrix {
    using SquareMatrix::SquareMatrix;
    // Sets a_ij = v and a_ji = -v.
    void set(int i, int j, const TruncSeries& v);
    // Throws NotSkew unless antisymmetric with zero diagonal.
    void check() const;
};

// Laplace expansion memoized over used columns.
TruncSeries det(const SquareMatrix& m);
// Expansion along the first row, memoized over remaining indices.
TruncSeries pfaffian(const SkewMatrix& m);

// Generalized binomial coefficient binom(a, k) for any integer a and k >= 0.
Rational gen_binomial(int a, int k);

enum class OneRow { H, G, Q, GQ };
// Coefficients of u^l (l in [-cap, cap]) of the one-row generating function with k factors
// (1 + b_j u) (or 1 + (u + beta) b_j for G and GQ). H and Q use the additive law, G and GQ the
// multiplicative law u + v + beta uv.
std::map<int, TruncSeries> one_row_series(OneRow kind, int k, int n, const BSequence& b, int cap);

enum class JtVariant {
    Tails,    // det h^{(lambda_i - i + n)}_{lambda_i - i + j}(x|b)
    Shifted,  // det h_{lambda_i - i + j}(x | tau^{1-j} b)
};
TruncSeries jacobi_trudi_schur(const Partition& lambda, int n, bool factorial, const BSequence& b, int cap,
                               JtVariant variant = JtVariant::Tails);
TruncSeries grothendieck_det(const Partition& lambda, int n, bool factorial, const BSequence& b, int cap);

// Odd-length strict partitions get a zero part. Against it, q_pfaffian uses the one-row value
// Q_{(a,0)} := Q_a and gq_pfaffian the two-variable coefficient at (a, 0).
TruncSeries q_pfaffian(const Partition& nu, int n, bool factorial, const BSequence& b, int cap);
TruncSeries gq_pfaffian(const Partition& nu, int n, bool factorial, const BSequence& b, int cap);

// Matrices behind the closed forms (exposed for Pf^2 = det checks).
SkewMatrix q_matrix(const Partition& nu, int n, bool factorial, const BSequence& b, int cap);
SkewMatrix gq_matrix(const Partition& nu, int n, bool factorial, const BSequence& b, int cap);

}  // namespace sf
