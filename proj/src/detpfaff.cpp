#include "symfun/detpfaff.hpp"

#include <bit>
#include <functional>
#include <unordered_map>

#include "symfun/parallel.hpp"

namespace sf {

void SkewMatrix::set(int i, int j, const TruncSeries& v) {
    at(i, j) = v;
    at(j, i) = -v;
}

void SkewMatrix::check() const {
    for (int i = 0; i < dim; ++i) {
        if (!at(i, i).is_zero()) throw NotSkew("diagonal entry is nonzero");
        for (int j = i + 1; j < dim; ++j)
            if (at(i, j) != -at(j, i)) throw NotSkew("matrix is not antisymmetric");
    }
}

TruncSeries det(const SquareMatrix& m) {
    if (m.dim > 20) throw std::invalid_argument("matrix too large for Laplace expansion");
    if (m.dim == 0) return TruncSeries::constant(Rational(1));
    std::unordered_map<std::uint32_t, TruncSeries> memo;
    std::function<TruncSeries(std::uint32_t)> minor = [&](std::uint32_t used) -> TruncSeries {
        int row = std::popcount(used);
        if (row == m.dim) return TruncSeries::constant(Rational(1));
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        TruncSeries acc;
        bool first = true;
        int free_before = 0;
        for (int c = 0; c < m.dim; ++c) {
            if (used & (1u << c)) continue;
            const TruncSeries& a = m.at(row, c);
            if (!a.is_zero()) {
                TruncSeries term = a * minor(used | (1u << c));
                if (free_before % 2) term = -term;
                acc = first ? term : acc + term;
                first = false;
            }
            ++free_before;
        }
        if (first) acc = TruncSeries(m.at(row, 0).cap());
        memo.emplace(used, acc);
        return acc;
    };
    return minor(0);
}

TruncSeries pfaffian(const SkewMatrix& m) {
    if (m.dim % 2) throw OddDimension("Pfaffian needs an even dimension");
    m.check();
    if (m.dim > 24) throw std::invalid_argument("matrix too large for Pfaffian expansion");
    if (m.dim == 0) return TruncSeries::constant(Rational(1));
    std::unordered_map<std::uint32_t, TruncSeries> memo;
    std::function<TruncSeries(std::uint32_t)> pf = [&](std::uint32_t rest) -> TruncSeries {
        if (!rest) return TruncSeries::constant(Rational(1));
        auto it = memo.find(rest);
        if (it != memo.end()) return it->second;
        int i = std::countr_zero(rest);
        std::uint32_t others = rest & ~(1u << i);
        TruncSeries acc(m.at(i, i).cap());
        int pos = 0;
        for (int j = i + 1; j < m.dim; ++j) {
            if (!(others & (1u << j))) continue;
            const TruncSeries& a = m.at(i, j);
            if (!a.is_zero()) {
                TruncSeries term = a * pf(others & ~(1u << j));
                acc = pos % 2 ? acc - term : acc + term;
            }
            ++pos;
        }
        memo.emplace(rest, acc);
        return acc;
    };
    return pf((m.dim == 32 ? 0u : (1u << m.dim)) - 1u);
}

Rational gen_binomial(int a, int k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(a - i, i + 1);
    return r;
}

namespace {

FormalGroupLaw law_of(OneRow kind) {
    return kind == OneRow::H || kind == OneRow::Q ? FormalGroupLaw::additive() : FormalGroupLaw::multiplicative();
}

TruncSeries beta_power(int k) { return TruncSeries::monomial(Monomial::var(VarId::beta(), k), Rational(1)); }

// Coefficient l of a one-row series, zero outside the computed range.
TruncSeries pick(const std::map<int, TruncSeries>& s, int l, int cap) {
    auto it = s.find(l);
    return it == s.end() ? TruncSeries(cap) : it->second;
}

void require_length(const Partition& lambda, int n) {
    if (lambda.length() > n) throw RankError("partition longer than the number of variables");
}

void require_strict(const Partition& nu) {
    if (!nu.is_strict()) throw NotStrict("partition must be strict");
}

// Two-variable coefficient [u1^{-a} u2^{-c}] of the Q-type product with the given tails.
TruncSeries two_row(const FormalGroupLaw& fgl, int n, int a, int c, const std::vector<int>& tails,
                    const BSequence& b, int cap) {
    GfRequest req;
    req.kind = GfKind::HQ;
    req.n = n;
    req.target = {a, c};
    req.tails = tails;
    req.fgl = fgl;
    req.b = b;
    req.tval = TruncSeries::constant(Rational(-1));
    req.cap = cap;
    return gf_extract(req);
}

std::vector<int> padded_parts(const Partition& nu) {
    std::vector<int> v = nu.parts();
    if (v.size() % 2) v.push_back(0);
    return v;
}

}  // namespace

std::map<int, TruncSeries> one_row_series(OneRow kind, int k, int n, const BSequence& b, int cap) {
    if (k < 0) throw std::invalid_argument("tail length must be non-negative");
    GfKind g = kind == OneRow::H || kind == OneRow::G ? GfKind::KL : GfKind::HQ;
    return one_row_coefficients(g, n, k, law_of(kind), b, cap);
}

TruncSeries jacobi_trudi_schur(const Partition& lambda, int n, bool factorial, const BSequence& b, int cap,
                               JtVariant variant) {
    require_length(lambda, n);
    int r = lambda.length();
    SquareMatrix M(r);
    parallel_for(static_cast<std::size_t>(r), [&](std::size_t row) {
        int i = static_cast<int>(row) + 1;
        int li = lambda[i];
        std::map<int, TruncSeries> tails_series;
        if (variant == JtVariant::Tails) tails_series = one_row_series(OneRow::H, factorial ? li - i + n : 0, n, b, cap);
        for (int j = 1; j <= r; ++j) {
            int l = li - i + j;
            TruncSeries v(cap);
            if (l >= 0) {
                if (variant == JtVariant::Tails) {
                    v = pick(tails_series, l, cap);
                } else {
                    int k = factorial ? l - 1 + n : 0;
                    v = pick(one_row_series(OneRow::H, std::max(k, 0), n, b.shifted(j - 1), cap), l, cap);
                }
            }
            M.at(i - 1, j - 1) = v;
        }
    });
    return det(M).truncate(cap);
}

TruncSeries grothendieck_det(const Partition& lambda, int n, bool factorial, const BSequence& b, int cap) {
    require_length(lambda, n);
    int r = lambda.length();
    SquareMatrix M(r);
    parallel_for(static_cast<std::size_t>(r), [&](std::size_t row) {
        int i = static_cast<int>(row) + 1;
        int li = lambda[i];
        auto G = one_row_series(OneRow::G, factorial ? li - i + n : 0, n, b, cap);
        for (int j = 1; j <= r; ++j) {
            SeriesBuilder acc(cap);
            for (int k = 0; li - i + j + k <= cap; ++k) {
                Rational c = gen_binomial(i - r, k);
                if (c.is_zero()) continue;
                mul_accumulate(acc, beta_power(k), pick(G, li - i + j + k, cap), cap, c);
            }
            M.at(i - 1, j - 1) = acc.build();
        }
    });
    return det(M).truncate(cap);
}

SkewMatrix q_matrix(const Partition& nu, int n, bool factorial, const BSequence& b, int cap) {
    require_strict(nu);
    std::vector<int> v = padded_parts(nu);
    int d = static_cast<int>(v.size());
    FormalGroupLaw add = FormalGroupLaw::additive();
    SkewMatrix M(d);
    for (int i = 0; i < d; ++i) M.at(i, i) = TruncSeries(cap);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) cells.emplace_back(i, j);
    std::vector<TruncSeries> vals(cells.size());
    parallel_for(cells.size(), [&](std::size_t c) {
        auto [i, j] = cells[c];
        int a = v[static_cast<std::size_t>(i)], e = v[static_cast<std::size_t>(j)];
        if (e == 0) {
            vals[c] = pick(one_row_series(OneRow::Q, factorial ? a - 1 : 0, n, b, cap), a, cap);
        } else {
            std::vector<int> tails;
            if (factorial) tails = {a - 1, e - 1};
            vals[c] = two_row(add, n, a, e, tails, b, cap);
        }
    });
    for (std::size_t c = 0; c < cells.size(); ++c) M.set(cells[c].first, cells[c].second, vals[c]);
    return M;
}

SkewMatrix gq_matrix(const Partition& nu, int n, bool factorial, const BSequence& b, int cap) {
    require_strict(nu);
    std::vector<int> v = padded_parts(nu);
    int d = static_cast<int>(v.size());
    FormalGroupLaw mult = FormalGroupLaw::multiplicative();
    SkewMatrix M(d);
    for (int i = 0; i < d; ++i) M.at(i, i) = TruncSeries(cap);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) cells.emplace_back(i, j);
    std::vector<TruncSeries> vals(cells.size());
    parallel_for(cells.size(), [&](std::size_t c) {
        auto [i0, j0] = cells[c];
        int i = i0 + 1, j = j0 + 1;
        int p = v[static_cast<std::size_t>(i0)], q = v[static_cast<std::size_t>(j0)];
        SeriesBuilder acc(cap);
        if (q == 0) {
            // binom(j - d, l) = binom(0, l) leaves only l = 0.
            std::vector<int> tails;
            if (factorial) tails = {p - 1, 0};
            for (int k = 0; p + k <= cap; ++k) {
                Rational bk = gen_binomial(i + 1 - d, k);
                if (!bk.is_zero()) mul_accumulate(acc, beta_power(k), two_row(mult, n, p + k, 0, tails, b, cap), cap, bk);
            }
        } else {
            std::vector<int> tails;
            if (factorial) tails = {p - 1, q - 1};
            for (int k = 0; p + q + k <= cap; ++k) {
                Rational bk = gen_binomial(i + 1 - d, k);
                if (bk.is_zero()) continue;
                for (int l = 0; p + q + k + l <= cap; ++l) {
                    Rational bl = gen_binomial(j - d, l);
                    if (bl.is_zero()) continue;
                    TruncSeries e = two_row(mult, n, p + k, q + l, tails, b, cap);
                    mul_accumulate(acc, beta_power(k + l), e, cap, bk * bl);
                }
            }
        }
        vals[c] = acc.build();
    });
    for (std::size_t c = 0; c < cells.size(); ++c) M.set(cells[c].first, cells[c].second, vals[c]);
    return M;
}

TruncSeries q_pfaffian(const Partition& nu, int n, bool factorial, const BSequence& b, int cap) {
    return pfaffian(q_matrix(nu, n, factorial, b, cap)).truncate(cap);
}

TruncSeries gq_pfaffian(const Partition& nu, int n, bool factorial, const BSequence& b, int cap) {
    return pfaffian(gq_matrix(nu, n, factorial, b, cap)).truncate(cap);
}

}  // namespace sf
