#include "symfun/genfun.hpp"

#include <optional>
#include <set>

namespace sf {

BSequence shift_b(const BSequence& seq) { return seq.shifted(1); }

namespace {

using Image = MultiLaurent::Image;

LaurentKey unit_key(int i, int d) {
    LaurentKey e{};
    e[static_cast<std::size_t>(i - 1)] = d;
    return e;
}

bool is_rational_constant(const TruncSeries& s) {
    for (auto& t : s.terms())
        if (!t.mono.is_one()) return false;
    return true;
}

// Factor builders over a fixed shape. The two-variable series live in the
// placeholders U1 (the expansion variable) and U2 (the other argument).
class Factors {
public:
    Factors(const LaurentShape& shape, const FormalGroupLaw& fgl, const TruncSeries& tval, int n)
        : shape_(shape), fgl_(fgl), tval_(tval), n_(n) {
        int bmax = shape.cap;
        for (int k = 0; k < shape.r; ++k) bmax = std::max(bmax, shape.bounds[static_cast<std::size_t>(k)]);
        D_ = bmax + 1;
    }

    const LaurentShape& shape() const { return shape_; }
    MultiLaurent one() const { return MultiLaurent::constant(shape_, TruncSeries::constant(Rational(1))); }

    // U1 +_L U2
    const TruncSeries& gadd() {
        if (!gadd_) gadd_ = formal_sum(fgl_, var(1), var(2));
        return *gadd_;
    }
    // U1 +_L chi(U2)
    const TruncSeries& gsub() {
        if (!gsub_) gsub_ = formal_difference(fgl_, var(1), var(2));
        return *gsub_;
    }
    // U1 +_L [t](chi(U2))
    const TruncSeries& gt() {
        if (!gt_) gt_ = formal_sum(fgl_, var(1), t_series(fgl_, formal_inverse(fgl_, var(2)), tval_));
        return *gt_;
    }
    // [t](U1 +_L chi(U2))
    const TruncSeries& tsub() {
        if (!tsub_) tsub_ = t_series(fgl_, gsub(), tval_);
        return *tsub_;
    }

    // h(u_i, other) / u_i
    MultiLaurent over_u(const TruncSeries& h, int i, const Image& other) const {
        return MultiLaurent::embed(shape_, h, Image::of_u(i), other, unit_key(i, -1));
    }
    // prod_j u_i / (u_i + xbar_j), one factor at a time
    MultiLaurent inv_over_u_x(int i) {
        MultiLaurent p = one();
        for (int j = 1; j <= n_; ++j) p = p * over_u(gsub(), i, Image::of(TruncSeries::variable(VarId::x(j)))).inverse();
        return p;
    }
    MultiLaurent over_u_x(const TruncSeries& h, int i) const {
        MultiLaurent p = one();
        for (int j = 1; j <= n_; ++j) p = p * over_u(h, i, Image::of(TruncSeries::variable(VarId::x(j))));
        return p;
    }

    // 1/P(u_i) = sum (k+1) m_k u_i^k
    MultiLaurent inv_p(int i) const {
        std::vector<TruncSeries> c{TruncSeries::constant(Rational(1))};
        int top = 0;
        for (int k = 0; k < shape_.r; ++k) top = std::max(top, shape_.bounds[static_cast<std::size_t>(k)]);
        for (int k = 1; k <= top; ++k) c.push_back(fgl_.log_coeff(k).scaled(Rational(k + 1)));
        return MultiLaurent::power_series(shape_, i, c);
    }

    MultiLaurent tail(int i, int k, const BSequence& b) {
        MultiLaurent p = one();
        for (int j = 1; j <= k; ++j) {
            int src = b.source_index(j);
            if (!src) continue;
            p = p * over_u(gadd(), i, Image::of(TruncSeries::variable(VarId::b(src))));
        }
        return p;
    }

    // u_i / (u_i +_L [t](ubar_i)); sets *pending when a (1 - t) factor was divided out.
    MultiLaurent self_hp(int i, bool* pending) {
        MultiLaurent R = MultiLaurent::embed(shape_, gt(), Image::of_u(i), Image::of_u(i), unit_key(i, -1));
        if (is_rational_constant(tval_)) {
            *pending = false;
            return R.inverse();
        }
        *pending = true;
        TruncSeries one_minus_t = TruncSeries::constant(Rational(1)) - tval_;
        return R.divide_coefficients(one_minus_t).inverse();
    }

    MultiLaurent cross_kl(int i, int j) { return over_u(gsub(), j, Image::of_u(i)); }
    MultiLaurent cross_hl(int i, int j) { return cross_kl(i, j) * over_u(gt(), j, Image::of_u(i)).inverse(); }

    // prod_j (u_i + [t](xbar_j)) / (u_i + xbar_j)
    MultiLaurent hq_ratio(int i) { return over_u_x(gt(), i) * inv_over_u_x(i); }

    // The bracket of the corrected generating function for variable i.
    MultiLaurent bracket(int i) {
        MultiLaurent Winv = inv_over_u_x(i);
        MultiLaurent N = over_u_x(gt(), i);
        MultiLaurent C = one(), Dp = one();
        for (int j = 1; j < i; ++j) {
            C = C * over_u(gt(), i, Image::of_u(j));
            Dp = Dp * over_u(tsub(), i, Image::of_u(j)).divide_coefficients(tval_);
        }
        MultiLaurent Tp = one();
        for (int j = 1; j <= n_; ++j)
            Tp = Tp * over_u(tsub(), i, Image::of(TruncSeries::variable(VarId::x(j)))).divide_coefficients(tval_);
        TruncSeries scal = tval_.pow(n_ - i + 1);
        MultiLaurent B = (C * Dp.inverse() * Tp).scale(scal);
        return Winv * (N - B);
    }

private:
    TruncSeries var(int k) const { return TruncSeries::variable(VarId::u(k), D_); }

    LaurentShape shape_;
    FormalGroupLaw fgl_;
    TruncSeries tval_;
    int n_;
    int D_;
    std::optional<TruncSeries> gadd_, gsub_, gt_, tsub_;
};

LaurentShape shape_for(const std::vector<int>& target, int cap) {
    LaurentShape s;
    s.r = static_cast<int>(target.size());
    s.cap = cap;
    int sum = 0;
    for (int k = 0; k < s.r; ++k) {
        sum -= target[static_cast<std::size_t>(k)];
        s.bounds[static_cast<std::size_t>(k)] = sum + cap;
    }
    return s;
}

bool shape_empty(const LaurentShape& s) {
    for (int k = 0; k < s.r; ++k)
        if (s.bounds[static_cast<std::size_t>(k)] < 0) return true;
    return s.cap < 0;
}

}  // namespace

TruncSeries gf_extract(const GfRequest& req) {
    int r = static_cast<int>(req.target.size());
    if (r > kMaxU) throw RankError("at most " + std::to_string(kMaxU) + " generating variables");
    if (r > 0 && !req.tails.empty() && static_cast<int>(req.tails.size()) != r)
        throw std::invalid_argument("tails must list one entry per variable");
    if (req.cap == kNoCap) throw InfiniteCap("coefficient extraction needs a finite cap");
    if (r == 0) return TruncSeries::constant(Rational(1), req.cap);
    LaurentShape shape = shape_for(req.target, req.cap);
    if (shape_empty(shape)) return TruncSeries(req.cap);
    for (auto& t : req.tval.terms())
        if (t.mono.weight()) throw NonScalarMultiplier("t value must have weight 0");
    bool hl = req.kind != GfKind::KL;
    if (hl && is_rational_constant(req.tval) && req.tval.constant_term().is_one())
        throw std::domain_error("t = 1 makes the generating function singular");

    Factors F(shape, req.fgl, req.tval, req.n);
    MultiLaurent P = F.one();
    for (int j = 2; j <= r; ++j)
        for (int i = 1; i < j; ++i) P = P * (req.kind == GfKind::KL ? F.cross_kl(i, j) : F.cross_hl(i, j));
    if (req.kind == GfKind::HPCorrected)
        for (int i = 2; i <= r; ++i) P = P * F.bracket(i);

    int pending = 0;
    std::vector<int> prefix;
    int sum = 0;
    LaurentKey target{};
    for (int k = 0; k < r; ++k) {
        sum -= req.target[static_cast<std::size_t>(k)];
        prefix.push_back(sum);
        target[static_cast<std::size_t>(k)] = -req.target[static_cast<std::size_t>(k)];
    }

    TruncSeries result;
    for (int i = 1; i <= r; ++i) {
        MultiLaurent phi = F.inv_p(i);
        switch (req.kind) {
            case GfKind::KL: phi = phi * F.inv_over_u_x(i); break;
            case GfKind::HQ: phi = phi * F.hq_ratio(i); break;
            case GfKind::HP:
            case GfKind::HPCorrected: {
                bool p = false;
                phi = phi * F.self_hp(i, &p);
                if (p) ++pending;
                phi = phi * (req.kind == GfKind::HP ? F.hq_ratio(i) : i == 1 ? F.bracket(1) : F.one());
                break;
            }
        }
        if (!req.tails.empty()) phi = phi * F.tail(i, req.tails[static_cast<std::size_t>(i - 1)], req.b);
        if (i < r) {
            P = (P * phi).restrict_prefix(i, prefix);
        } else {
            result = product_coefficient(P, phi, target);
        }
    }
    result = result.truncate(req.cap);
    if (pending) {
        TruncSeries d = (TruncSeries::constant(Rational(1)) - req.tval).pow(pending);
        result = exact_divide(result.with_cap(kNoCap), d).truncate(req.cap);
    }
    return result;
}

namespace {

GfRequest request_for(const FamilySpec& spec, bool shifted) {
    spec.validate();
    Family f = spec.effective_family();
    const Partition& lam = spec.lambda;
    int r = lam.length();
    GfRequest req;
    req.n = spec.n;
    req.fgl = spec.fgl;
    req.b = spec.b;
    req.cap = spec.effective_cap();
    req.target = lam.parts();
    auto tails = [&](int offset_kind) {
        std::vector<int> t;
        if (!spec.factorial) return t;
        for (int i = 1; i <= r; ++i) {
            int li = lam[i];
            t.push_back(offset_kind == 0 ? li - i + spec.n : offset_kind == 1 ? li : li - 1);
        }
        return t;
    };
    switch (f) {
        case Family::S_KL:
            req.kind = GfKind::KL;
            req.tails = tails(0);
            break;
        case Family::S_UF: throw std::invalid_argument("s_uf has no generating-function route");
        case Family::P:
        case Family::HP:
            req.tval = f == Family::P ? TruncSeries::constant(Rational(-1)) : TruncSeries::variable(VarId::t());
            if (!spec.factorial) {
                req.kind = GfKind::HP;
            } else if (shifted) {
                req.kind = GfKind::HP;
                req.tails = tails(2);
            } else {
                req.kind = GfKind::HPCorrected;
                req.tails = tails(1);
            }
            break;
        case Family::Q:
        case Family::HQ:
            req.tval = f == Family::Q ? TruncSeries::constant(Rational(-1)) : TruncSeries::variable(VarId::t());
            req.kind = GfKind::HQ;
            req.tails = tails(2);
            break;
    }
    return req;
}

}  // namespace

TruncSeries gf_coefficient(const FamilySpec& spec) { return gf_extract(request_for(spec, false)); }

TruncSeries gf_coefficient_shifted(const FamilySpec& spec) {
    Family f = spec.effective_family();
    if (f != Family::P && f != Family::HP) throw std::invalid_argument("the shifted form applies to P and HP");
    return gf_extract(request_for(spec, true));
}

TruncSeries gf_hp_factorial_correction(const Partition& lambda, int n, const FormalGroupLaw& fgl, const BSequence& b,
                                       int cap) {
    FamilySpec spec;
    spec.family = Family::HP;
    spec.lambda = lambda;
    spec.n = n;
    spec.factorial = true;
    spec.fgl = fgl;
    spec.b = b;
    spec.cap = cap;
    return gf_coefficient(spec);
}

namespace {

LaurentShape one_variable_shape(int cap) {
    if (cap == kNoCap) throw InfiniteCap("one-variable series need a finite cap");
    LaurentShape shape;
    shape.r = 1;
    shape.cap = cap;
    shape.bounds[0] = 2 * cap;
    return shape;
}

// Coefficients of u^m (key -m) for m in [-cap, cap].
std::map<int, TruncSeries> read_out(const MultiLaurent& s, int cap) {
    std::map<int, TruncSeries> out;
    for (int m = -cap; m <= cap; ++m) out.emplace(m, s.coefficient(unit_key(1, -m)).truncate(cap).with_cap(cap));
    return out;
}

std::map<int, TruncSeries> one_variable(const std::vector<TruncSeries>& roots_e,
                                        const std::vector<TruncSeries>* roots_f, const FormalGroupLaw& fgl,
                                        int cap) {
    LaurentShape shape = one_variable_shape(cap);
    Factors F(shape, fgl, TruncSeries::constant(Rational(-1)), 0);
    MultiLaurent s = F.inv_p(1);
    MultiLaurent w = F.one();
    for (auto& x : roots_e) w = w * F.over_u(F.gsub(), 1, Image::of(x));
    s = s * w.inverse();
    if (roots_f) {
        for (auto& y : *roots_f) s = s * F.over_u(F.gsub(), 1, Image::of(y));
    }
    return read_out(s, cap);
}

}  // namespace

std::map<int, TruncSeries> segre_series(const std::vector<TruncSeries>& roots, const FormalGroupLaw& fgl, int cap) {
    return one_variable(roots, nullptr, fgl, cap);
}

std::map<int, TruncSeries> relative_segre(const std::vector<TruncSeries>& roots_e,
                                          const std::vector<TruncSeries>& roots_f, const FormalGroupLaw& fgl,
                                          int cap) {
    return one_variable(roots_e, &roots_f, fgl, cap);
}

std::map<int, TruncSeries> one_row_coefficients(GfKind kind, int n, int tail, const FormalGroupLaw& fgl,
                                                const BSequence& b, int cap) {
    if (kind != GfKind::KL && kind != GfKind::HQ) throw std::invalid_argument("one-row series exist for KL and HQ kinds");
    LaurentShape shape = one_variable_shape(cap);
    Factors F(shape, fgl, TruncSeries::constant(Rational(-1)), n);
    MultiLaurent s = F.inv_p(1);
    s = s * (kind == GfKind::KL ? F.over_u_x(F.gsub(), 1).inverse() : F.hq_ratio(1));
    s = s * F.tail(1, tail, b);
    return read_out(s, cap);
}

TruncSeries dp_pushforward(const TruncSeries& f, int n, int r, const FormalGroupLaw& fgl, int cap) {
    if (r < 0 || r > n) throw RankError("rank must satisfy 0 <= r <= n");
    if (r > kMaxU) throw RankError("at most " + std::to_string(kMaxU) + " generating variables");
    if (cap == kNoCap) throw InfiniteCap("push-forward needs a finite cap");
    // Group f by the exponents of x_1..x_r.
    std::map<std::vector<int>, SeriesBuilder*> groups;
    std::vector<std::unique_ptr<SeriesBuilder>> owned;
    for (auto& t : f.terms()) {
        std::vector<int> e(static_cast<std::size_t>(r));
        Monomial rest = t.mono;
        for (int i = 1; i <= kMaxX; ++i) {
            int ex = t.mono.exponent(VarId::x(i));
            if (!ex) continue;
            if (i > r) throw std::invalid_argument("push-forward argument may only involve x_1..x_r");
            e[static_cast<std::size_t>(i - 1)] = ex;
            rest.set(VarId::x(i), 0);
        }
        auto it = groups.find(e);
        if (it == groups.end()) {
            owned.push_back(std::make_unique<SeriesBuilder>(kNoCap));
            it = groups.emplace(e, owned.back().get()).first;
        }
        it->second->add(rest, t.coeff);
    }
    if (r == 0) return f.truncate(cap).with_cap(cap);
    // [u^{n-1}](f(u) prod_{i<j} (u_j + ubar_i) prod S(u_i)): u^e times u_j^{j-1} times normalized factors.
    std::vector<std::pair<std::vector<int>, TruncSeries>> targets;
    std::array<int, kMaxU> bmax{};
    bmax.fill(INT_MIN);
    for (auto& [e, bld] : groups) {
        std::vector<int> tg(static_cast<std::size_t>(r));
        int sum = 0;
        for (int j = 1; j <= r; ++j) {
            tg[static_cast<std::size_t>(j - 1)] = -((n - 1) - e[static_cast<std::size_t>(j - 1)] - (j - 1));
            sum -= tg[static_cast<std::size_t>(j - 1)];
            bmax[static_cast<std::size_t>(j - 1)] = std::max(bmax[static_cast<std::size_t>(j - 1)], sum + cap);
        }
        targets.emplace_back(tg, bld->build());
    }
    LaurentShape shape;
    shape.r = r;
    shape.cap = cap;
    shape.bounds = bmax;
    if (shape_empty(shape)) return TruncSeries(cap);
    Factors F(shape, fgl, TruncSeries::constant(Rational(-1)), n);
    MultiLaurent P = F.one();
    for (int j = 2; j <= r; ++j)
        for (int i = 1; i < j; ++i) P = P * F.cross_kl(i, j);
    // Prefix sums of the wanted keys; partial products only keep keys that can still reach one.
    std::vector<std::set<std::vector<int>>> prefixes(static_cast<std::size_t>(r));
    for (auto& [tg, coeff] : targets) {
        std::vector<int> pre;
        int sum = 0;
        for (int k = 0; k < r; ++k) {
            sum -= tg[static_cast<std::size_t>(k)];
            pre.push_back(sum);
            prefixes[static_cast<std::size_t>(k)].insert(pre);
        }
    }
    for (int i = 1; i < r; ++i) {
        P = P * (F.inv_p(i) * F.inv_over_u_x(i));
        const auto& allowed = prefixes[static_cast<std::size_t>(i - 1)];
        P = P.filtered([&](const LaurentKey& e) {
            std::vector<int> pre;
            int sum = 0;
            for (int k = 0; k < i; ++k) pre.push_back(sum += e[static_cast<std::size_t>(k)]);
            return allowed.count(pre) > 0;
        });
    }
    MultiLaurent last = F.inv_p(r) * F.inv_over_u_x(r);
    SeriesBuilder out(cap);
    for (auto& [tg, coeff] : targets) {
        LaurentKey key{};
        for (int k = 0; k < r; ++k) key[static_cast<std::size_t>(k)] = -tg[static_cast<std::size_t>(k)];
        TruncSeries v = product_coefficient(P, last, key);
        mul_accumulate(out, v, coeff, cap);
    }
    return out.build();
}

}  // namespace sf
