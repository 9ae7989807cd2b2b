#include "symfun/symfun.hpp"

#include <algorithm>

namespace sf {

std::string family_name(Family f) {
    switch (f) {
        case Family::S_KL: return "s_kl";
        case Family::S_UF: return "s_uf";
        case Family::P: return "p";
        case Family::Q: return "q";
        case Family::HP: return "hp";
        case Family::HQ: return "hq";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    std::string l = s;
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
    if (l == "s_kl" || l == "skl" || l == "kl") return Family::S_KL;
    if (l == "s_uf" || l == "suf" || l == "uf") return Family::S_UF;
    if (l == "p") return Family::P;
    if (l == "q") return Family::Q;
    if (l == "hp") return Family::HP;
    if (l == "hq") return Family::HQ;
    throw std::invalid_argument("unknown family: " + s);
}

int BSequence::source_index(int i) const {
    int src = i - shift;
    if (src <= 0) return 0;
    if (limit > 0 && src > limit) return 0;
    return src;
}

TruncSeries BSequence::at(int i, int cap) const {
    int src = source_index(i);
    return src ? TruncSeries::variable(VarId::b(src), cap) : TruncSeries(cap);
}

Family FamilySpec::effective_family() const {
    if (t_on && family == Family::P) return Family::HP;
    if (t_on && family == Family::Q) return Family::HQ;
    return family;
}

void FamilySpec::validate() const {
    if (n < 1 || n > kMaxX) throw RankError("n must lie in 1.." + std::to_string(kMaxX));
    if (lambda.length() > n) throw RankError("partition longer than the number of variables");
    Family f = effective_family();
    if ((f == Family::P || f == Family::Q) && !lambda.is_strict())
        throw StrictnessError("P and Q need a strict partition, got " + lambda.str());
    if (effective_cap() == kNoCap) throw InfiniteCap("family evaluation needs a finite cap");
}

namespace {

// Moves exponents between slots; colliding exponents add up.
TruncSeries rename_slots(const TruncSeries& s, const std::vector<std::pair<int, int>>& moves) {
    if (moves.empty()) return s;
    std::vector<Term> out;
    out.reserve(s.size());
    for (auto& t : s.terms()) {
        Monomial m = t.mono;
        for (auto& [from, to] : moves) m.set_slot(from, 0);
        for (auto& [from, to] : moves) m.set_slot(to, m.at(to) + t.mono.at(from));
        out.push_back(Term{m, t.coeff});
    }
    return TruncSeries(std::move(out), s.cap());
}

int xs(int i) { return kSlotX + i - 1; }
int bs(int j) { return kSlotB + j - 1; }

TruncSeries x_var(int i, int cap) { return TruncSeries::variable(VarId::x(i), cap); }

// Building blocks in the placeholder variables x1, x2, b1 at a fixed cap.
struct Blocks {
    const FormalGroupLaw& fgl;
    int cap;
    TruncSeries xb_, xx_, xtx_, unit_inv_;
    bool have_xb = false, have_xx = false, have_xtx = false, have_unit = false;

    Blocks(const FormalGroupLaw& f, int c) : fgl(f), cap(c) {}

    // x1 +_L b1
    const TruncSeries& xb() {
        if (!have_xb) {
            xb_ = formal_sum(fgl, x_var(1, cap), TruncSeries::variable(VarId::b(1), cap));
            have_xb = true;
        }
        return xb_;
    }
    // x1 +_L x2
    const TruncSeries& xx() {
        if (!have_xx) {
            xx_ = formal_sum(fgl, x_var(1, cap), x_var(2, cap));
            have_xx = true;
        }
        return xx_;
    }
    // x1 +_L [t](xbar2)
    const TruncSeries& xtx() {
        if (!have_xtx) {
            TruncSeries t = TruncSeries::variable(VarId::t());
            xtx_ = formal_sum(fgl, x_var(1, cap), t_series(fgl, formal_inverse(fgl, x_var(2, cap)), t));
            have_xtx = true;
        }
        return xtx_;
    }
    // ((x1 +_L xbar2) / (x1 - x2))^{-1}
    const TruncSeries& unit_inv() {
        if (!have_unit) {
            switch (fgl.kind()) {
                case FormalGroupLaw::Kind::Additive: unit_inv_ = TruncSeries::constant(Rational(1), cap); break;
                case FormalGroupLaw::Kind::Multiplicative:
                    unit_inv_ = (TruncSeries::constant(Rational(1)) +
                                 mul(TruncSeries::variable(VarId::beta()), x_var(2, kNoCap)))
                                    .truncate(cap);
                    break;
                default: {
                    TruncSeries d = formal_difference(fgl, x_var(1, cap + 1), x_var(2, cap + 1));
                    TruncSeries u = exact_divide(d, x_var(1, kNoCap) - x_var(2, kNoCap));
                    unit_inv_ = invert_unit(u.truncate(cap));
                }
            }
            have_unit = true;
        }
        return unit_inv_;
    }

    TruncSeries pair(const TruncSeries& s, int i, int j) const {
        if (i == 1 && j == 2) return s;
        return rename_slots(s, {{xs(1), xs(i)}, {xs(2), xs(j)}});
    }
    TruncSeries at_x(const TruncSeries& s, int i) const {
        return i == 1 ? s : rename_slots(s, {{xs(1), xs(i)}});
    }

    // x_i +_L b_{src}, src > 0
    TruncSeries xb_at(int i, int src) {
        std::vector<std::pair<int, int>> mv;
        if (i != 1) mv.emplace_back(xs(1), xs(i));
        if (src != 1) mv.emplace_back(bs(1), bs(src));
        return rename_slots(xb(), mv);
    }

    TruncSeries fact_power(int i, int k, bool factorial, const BSequence& b) {
        TruncSeries out = TruncSeries::constant(Rational(1), cap);
        TruncSeries x = x_var(i, cap);
        for (int j = 1; j <= k; ++j) {
            int src = factorial ? b.source_index(j) : 0;
            out = mul(out, src ? xb_at(i, src) : x);
        }
        return out;
    }
};

void check_exponent(int k) {
    if (k < 1) throw ZeroExponent("exponent must be at least 1");
}

TruncSeries chain(TruncSeries f, int n, int r) {
    for (int i = r; i >= 1; --i)
        for (int k = i; k <= n - 1; ++k) f = divided_difference(f, k);
    return f;
}

std::int64_t factorial_of(int m) {
    std::int64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

TruncSeries vandermonde(int from, int to) {
    TruncSeries v = TruncSeries::constant(Rational(1));
    for (int i = from; i <= to; ++i)
        for (int j = i + 1; j <= to; ++j) v = mul(v, x_var(i, kNoCap) - x_var(j, kNoCap));
    return v;
}

// Numerator powers and pair factors for a family, at cap W, without units.
TruncSeries numerator_with(Blocks& bl, const FamilySpec& spec, int& r_out) {
    const Partition& lam = spec.lambda;
    int n = spec.n;
    Family f = spec.effective_family();
    int r = f == Family::S_UF ? n : lam.length();
    r_out = r;
    TruncSeries N = TruncSeries::constant(Rational(1), bl.cap);
    const TruncSeries* pair = nullptr;
    if (f == Family::P || f == Family::Q) pair = &bl.xx();
    if (f == Family::HP || f == Family::HQ) pair = &bl.xtx();
    if (pair)
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= n; ++j) N = mul(N, bl.pair(*pair, i, j));
    for (int i = 1; i <= r; ++i) {
        int li = lam[i];
        switch (f) {
            case Family::S_KL: N = mul(N, bl.fact_power(i, li - i + n, spec.factorial, spec.b)); break;
            case Family::S_UF: N = mul(N, bl.fact_power(i, li + n - i, spec.factorial, spec.b)); break;
            case Family::P:
            case Family::HP: N = mul(N, bl.fact_power(i, li, spec.factorial, spec.b)); break;
            case Family::Q:
            case Family::HQ: break;
        }
        if (f == Family::Q) {
            TruncSeries xx = rename_slots(bl.xx(), {{xs(2), xs(1)}});
            N = mul(N, bl.at_x(xx, i));
            N = mul(N, bl.fact_power(i, li - 1, spec.factorial, spec.b));
        }
        if (f == Family::HQ) {
            TruncSeries d = rename_slots(bl.xtx(), {{xs(2), xs(1)}});
            N = mul(N, bl.at_x(d, i));
            N = mul(N, bl.fact_power(i, li - 1, spec.factorial, spec.b));
        }
    }
    return N;
}

TruncSeries units_product(Blocks& bl, int n, int r) {
    TruncSeries U = TruncSeries::constant(Rational(1), bl.cap);
    if (bl.fgl.kind() == FormalGroupLaw::Kind::Additive) return U;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= n; ++j) U = mul(U, bl.pair(bl.unit_inv(), i, j));
    return U;
}

}  // namespace

TruncSeries rename_x(const TruncSeries& s, const std::vector<int>& target) {
    std::vector<std::pair<int, int>> mv;
    for (std::size_t k = 0; k < target.size(); ++k)
        if (target[k] && target[k] != static_cast<int>(k) + 1) {
            if (target[k] < 1 || target[k] > kMaxX) throw IndexOutOfRange("rename target out of range");
            mv.emplace_back(xs(static_cast<int>(k) + 1), xs(target[k]));
        }
    return rename_slots(s, mv);
}

TruncSeries factorial_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap, const BSequence& b) {
    if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
    Blocks bl(fgl, cap);
    return bl.fact_power(i, k, factorial, b);
}

TruncSeries double_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap, const BSequence& b) {
    check_exponent(k);
    Blocks bl(fgl, cap);
    TruncSeries xx = formal_sum(fgl, x_var(i, cap), x_var(i, cap));
    return mul(xx, bl.fact_power(i, k - 1, factorial, b));
}

TruncSeries hl_power(int i, int k, const FormalGroupLaw& fgl, int cap) {
    return hl_fact_power(i, k, fgl, false, cap);
}

TruncSeries hl_fact_power(int i, int k, const FormalGroupLaw& fgl, bool factorial, int cap, const BSequence& b) {
    check_exponent(k);
    Blocks bl(fgl, cap);
    TruncSeries x = x_var(i, cap);
    TruncSeries t = TruncSeries::variable(VarId::t());
    TruncSeries head = formal_sum(fgl, x, t_series(fgl, formal_inverse(fgl, x), t));
    return mul(head, bl.fact_power(i, k - 1, factorial, b));
}

TruncSeries divided_difference(const TruncSeries& f, int k) {
    if (k < 1 || k + 1 > kMaxX) throw IndexOutOfRange("divided difference index out of range");
    int sa = xs(k), sb = xs(k + 1);
    int cap = f.finite_cap() ? f.cap() - 1 : kNoCap;
    if (cap < 0) return TruncSeries(0);
    SeriesBuilder out(cap, f.size());
    for (auto& t : f.terms()) {
        int a = t.mono.at(sa), b = t.mono.at(sb);
        if (a == b) continue;
        Monomial m = t.mono;
        Rational c = a > b ? t.coeff : -t.coeff;
        int hi = std::max(a, b), lo = std::min(a, b);
        // (x^hi y^lo - x^lo y^hi) / (x - y) = sum_{j=0}^{hi-lo-1} x^{hi-1-j} y^{lo+j}
        for (int j = 0; j <= hi - lo - 1; ++j) {
            m.set_slot(sa, hi - 1 - j);
            m.set_slot(sb, lo + j);
            out.add(m, c);
        }
    }
    return out.build();
}

int symmetrizer_length(int n, int r) {
    int l = 0;
    for (int i = 1; i <= r; ++i) l += n - i;
    return l;
}

TruncSeries inverse_denominator_units(int n, int r, const FormalGroupLaw& fgl, int cap) {
    Blocks bl(fgl, cap);
    return units_product(bl, n, r);
}

TruncSeries gysin_symmetrize(const TruncSeries& numerator, int n, int r, const FormalGroupLaw& fgl) {
    if (r < 0 || r > n) throw RankError("rank must satisfy 0 <= r <= n");
    if (n > kMaxX) throw RankError("too many variables");
    for (auto& t : numerator.terms())
        for (int i = n + 1; i <= kMaxX; ++i)
            if (t.mono.at(xs(i))) throw IndexOutOfRange("numerator mentions x" + std::to_string(i));
    TruncSeries f = numerator;
    if (fgl.kind() != FormalGroupLaw::Kind::Additive && r > 0) {
        if (!numerator.finite_cap()) throw InfiniteCap("symmetrizer over a nonadditive law needs a finite cap");
        f = mul(f, inverse_denominator_units(n, r, fgl, numerator.cap()));
    }
    return chain(f, n, r);
}

TruncSeries full_symmetrize(const TruncSeries& g, int n) { return chain(g, n, n); }

TruncSeries family_numerator(const FamilySpec& spec, int cap) {
    spec.validate();
    Blocks bl(spec.fgl, cap);
    int r = 0;
    return numerator_with(bl, spec, r);
}

TruncSeries eval_family(const FamilySpec& spec) {
    spec.validate();
    Family f = spec.effective_family();
    int n = spec.n;
    int r = f == Family::S_UF ? n : spec.lambda.length();
    int W = spec.effective_cap() + symmetrizer_length(n, r);
    Blocks bl(spec.fgl, W);
    TruncSeries N = numerator_with(bl, spec, r);
    N = mul(N, units_product(bl, n, r));
    return chain(N, n, r);
}

TruncSeries eval_pq_full_form(const FamilySpec& spec) {
    spec.validate();
    Family f = spec.effective_family();
    if (f != Family::P && f != Family::Q && f != Family::HP && f != Family::HQ)
        throw std::invalid_argument("full-group form applies to P, Q, HP and HQ");
    int n = spec.n, r = spec.lambda.length();
    int W = spec.effective_cap() + n * (n - 1) / 2;
    Blocks bl(spec.fgl, W);
    int rr = 0;
    TruncSeries g = numerator_with(bl, spec, rr);
    g = mul(g, units_product(bl, n, r));
    g = mul(g, vandermonde(r + 1, n)).truncate(W);
    return full_symmetrize(g, n).scaled(Rational(1, factorial_of(n - r)));
}

TruncSeries kl_class(const Partition& lambda, int d, int n, const FormalGroupLaw& fgl, int cap) {
    if (d < 1 || d > n) throw RankError("need 1 <= d <= n");
    if (lambda.length() > d || lambda[1] > n - d)
        throw ShapeError(lambda.str() + " does not fit in a " + std::to_string(d) + " x " + std::to_string(n - d) +
                         " rectangle");
    FamilySpec spec;
    spec.family = Family::S_KL;
    spec.lambda = lambda;
    spec.n = d;
    spec.factorial = true;
    spec.fgl = fgl;
    spec.cap = cap;
    spec.b.limit = n;
    return eval_family(spec);
}

TruncSeries empty_uf(int m, int offset, const FormalGroupLaw& fgl, bool factorial, int cap) {
    if (m == 0) return TruncSeries::constant(Rational(1), cap);
    FamilySpec spec;
    spec.family = Family::S_UF;
    spec.n = m;
    spec.factorial = factorial;
    spec.fgl = fgl;
    spec.cap = cap;
    TruncSeries s = eval_family(spec);
    std::vector<int> target(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) target[static_cast<std::size_t>(k - 1)] = offset + k;
    return rename_x(s, target);
}

TruncSeries uf_via_kl_difference(const Partition& lambda, int n, const FormalGroupLaw& fgl, bool factorial, int cap) {
    int r = lambda.length();
    if (r > n) throw RankError("partition longer than the number of variables");
    int W = cap + symmetrizer_length(n, r);
    Blocks bl(fgl, W);
    BSequence b;
    TruncSeries N = TruncSeries::constant(Rational(1), W);
    for (int i = 1; i <= r; ++i) N = mul(N, bl.fact_power(i, lambda[i] - i + n, factorial, b));
    N = mul(N, empty_uf(n - r, r, fgl, factorial, W));
    N = mul(N, units_product(bl, n, r));
    return chain(N, n, r);
}

}  // namespace sf
