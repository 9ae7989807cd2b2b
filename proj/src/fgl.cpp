#include "symfun/fgl.hpp"

#include <fstream>
#include <map>
#include <mutex>

#include "symfun/io.hpp"

namespace sf {

struct FormalGroupLaw::Impl {
    Kind kind;
    std::string name;
    std::vector<TruncSeries> custom;  // m_1..m_N
    std::mutex mu;
    std::vector<TruncSeries> exp_cache;  // index k -> e_k, index 0 unused
    std::map<std::pair<int, int>, TruncSeries> a_cache;
};

namespace {

TruncSeries C(std::int64_t n, std::int64_t d = 1) { return TruncSeries::constant(Rational(n, d)); }

TruncSeries beta_pow(int k) { return TruncSeries::monomial(Monomial::var(VarId::beta(), k), Rational(1)); }

void check_weight_zero(const TruncSeries& s, const std::string& what) {
    for (auto& t : s.terms())
        if (t.mono.weight() != 0) throw NonScalarMultiplier(what + " must have geometric weight 0");
}

void check_nilpotent(const TruncSeries& a) {
    if (!a.finite_cap()) throw InfiniteCap("formal group law operations need a finite cap");
    if (!a.is_zero() && a.min_weight() == 0) throw NonNilpotentArgument("argument has a weight-0 part");
}

}  // namespace

FormalGroupLaw FormalGroupLaw::additive() {
    auto p = std::make_shared<Impl>();
    p->kind = Kind::Additive;
    p->name = "additive";
    return FormalGroupLaw(p);
}

FormalGroupLaw FormalGroupLaw::multiplicative() {
    auto p = std::make_shared<Impl>();
    p->kind = Kind::Multiplicative;
    p->name = "multiplicative";
    return FormalGroupLaw(p);
}

FormalGroupLaw FormalGroupLaw::universal() {
    auto p = std::make_shared<Impl>();
    p->kind = Kind::Universal;
    p->name = "universal";
    return FormalGroupLaw(p);
}

FormalGroupLaw FormalGroupLaw::custom(std::vector<TruncSeries> log_coeffs) {
    for (auto& c : log_coeffs) check_weight_zero(c, "custom logarithm coefficient");
    auto p = std::make_shared<Impl>();
    p->kind = Kind::Custom;
    p->name = "custom";
    for (auto& c : log_coeffs) p->custom.push_back(c.with_cap(kNoCap));
    return FormalGroupLaw(p);
}

FormalGroupLaw FormalGroupLaw::custom_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open custom FGL file: " + path);
    nlohmann::json j;
    in >> j;
    const nlohmann::json& arr = j.is_array() ? j : j.at("log_coeffs");
    std::vector<TruncSeries> coeffs;
    for (auto& e : arr) {
        if (e.is_string()) coeffs.push_back(TruncSeries::constant(Rational::parse(e.get<std::string>())));
        else if (e.is_number_integer()) coeffs.push_back(TruncSeries::constant(Rational(e.get<std::int64_t>())));
        else coeffs.push_back(series_from_json(e));
    }
    FormalGroupLaw f = custom(std::move(coeffs));
    f.impl_->name = "custom:" + path;
    return f;
}

FormalGroupLaw FormalGroupLaw::from_name(const std::string& name) {
    if (name == "additive") return additive();
    if (name == "multiplicative") return multiplicative();
    if (name == "universal") return universal();
    if (name.rfind("custom:", 0) == 0) return custom_from_json_file(name.substr(7));
    throw std::invalid_argument("unknown formal group law: " + name);
}

FormalGroupLaw::Kind FormalGroupLaw::kind() const { return impl_->kind; }
std::string FormalGroupLaw::name() const { return impl_->name; }

TruncSeries FormalGroupLaw::log_coeff(int n) const {
    if (n < 1) throw std::invalid_argument("log coefficient index must be >= 1");
    switch (impl_->kind) {
        case Kind::Additive: return TruncSeries();
        case Kind::Multiplicative: return beta_pow(n).scaled(Rational(n % 2 ? -1 : 1, n + 1));
        case Kind::Universal: return TruncSeries::variable(VarId::m(n));
        case Kind::Custom:
            return n <= static_cast<int>(impl_->custom.size()) ? impl_->custom[static_cast<std::size_t>(n - 1)]
                                                                : TruncSeries();
    }
    return TruncSeries();
}

TruncSeries FormalGroupLaw::log_series_coeff(int k) const { return k == 1 ? C(1) : log_coeff(k - 1); }

TruncSeries FormalGroupLaw::exp_series_coeff(int k) const {
    if (k < 1) throw std::invalid_argument("exp coefficient index must be >= 1");
    if (k == 1) return C(1);
    switch (impl_->kind) {
        case Kind::Additive: return TruncSeries();
        case Kind::Multiplicative: {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
            return beta_pow(k - 1).scaled(Rational(mpq_class(1, f)));
        }
        default: break;
    }
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto& cache = impl_->exp_cache;
    if (static_cast<int>(cache.size()) <= k) {
        // Lagrange inversion with l(z) = z h(z): e_k = (1/k) [z^{k-1}] h^{-k}.
        // Powers via G P' = alpha G' P: d p_d = sum_i (alpha i - d + i) g_i p_{d-i}.
        int K = std::max(k, 2 * static_cast<int>(cache.size()));
        if (impl_->kind == Kind::Universal) K = std::max(k, std::min(K, kMaxM + 1));
        std::vector<TruncSeries> g(static_cast<std::size_t>(K));
        for (int i = 1; i < K; ++i) g[static_cast<std::size_t>(i)] = log_coeff(i);
        cache.assign(static_cast<std::size_t>(K) + 1, TruncSeries());
        cache[1] = C(1);
        for (int kk = 2; kk <= K; ++kk) {
            std::int64_t alpha = -kk;
            std::vector<TruncSeries> p(static_cast<std::size_t>(kk));
            p[0] = C(1);
            for (int d = 1; d < kk; ++d) {
                SeriesBuilder acc(kNoCap);
                for (int i = 1; i <= d; ++i) {
                    const auto& gi = g[static_cast<std::size_t>(i)];
                    if (gi.is_zero()) continue;
                    Rational w(alpha * i - d + i);
                    if (w.is_zero()) continue;
                    acc.add(mul(gi, p[static_cast<std::size_t>(d - i)]), w);
                }
                p[static_cast<std::size_t>(d)] = acc.build().scaled(Rational(1, d));
            }
            cache[static_cast<std::size_t>(kk)] = p[static_cast<std::size_t>(kk - 1)].scaled(Rational(1, kk));
        }
    }
    return cache[static_cast<std::size_t>(k)];
}

TruncSeries FormalGroupLaw::a(int i, int j) const {
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->a_cache.find({i, j});
        if (it != impl_->a_cache.end()) return it->second;
    }
    int cap = i + j;
    TruncSeries u = TruncSeries::variable(VarId::u(1), cap), v = TruncSeries::variable(VarId::u(2), cap);
    TruncSeries F = formal_sum(*this, u, v);
    Monomial m;
    m.set(VarId::u(1), i);
    m.set(VarId::u(2), j);
    TruncSeries out = TruncSeries::constant(Rational(0));
    SeriesBuilder acc(kNoCap);
    for (auto& t : F.terms()) {
        if (t.mono.at(slot_of(VarId::u(1))) == i && t.mono.at(slot_of(VarId::u(2))) == j) {
            Monomial rest = t.mono;
            rest.set(VarId::u(1), 0);
            rest.set(VarId::u(2), 0);
            acc.add(rest, t.coeff);
        }
    }
    out = acc.build();
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->a_cache.emplace(std::make_pair(i, j), out);
    return out;
}

TruncSeries formal_sum(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& b) {
    check_nilpotent(a);
    check_nilpotent(b);
    return fgl_sum(f, SeriesAlg{a}, SeriesAlg{b}).v;
}

TruncSeries formal_inverse(const FormalGroupLaw& f, const TruncSeries& a) {
    check_nilpotent(a);
    return fgl_inverse(f, SeriesAlg{a}).v;
}

TruncSeries formal_difference(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& b) {
    return formal_sum(f, a, formal_inverse(f, b));
}

TruncSeries t_series(const FormalGroupLaw& f, const TruncSeries& a, const TruncSeries& scalar) {
    check_nilpotent(a);
    check_weight_zero(scalar, "t-series multiplier");
    return fgl_t_series(f, SeriesAlg{a}, scalar.with_cap(kNoCap)).v;
}

TruncSeries logarithm(const FormalGroupLaw& f, const TruncSeries& a) {
    check_nilpotent(a);
    return fgl_log(f, SeriesAlg{a}).v;
}

TruncSeries exponential(const FormalGroupLaw& f, const TruncSeries& a) {
    check_nilpotent(a);
    return fgl_exp(f, SeriesAlg{a}).v;
}

TruncSeries inv_p_series(const FormalGroupLaw& f, int cap, VarId z) {
    if (cap == kNoCap) throw InfiniteCap("p_series needs a finite cap");
    SeriesBuilder acc(cap);
    acc.add(Monomial(), Rational(1));
    for (int n = 1; n <= cap; ++n) {
        TruncSeries c = f.log_coeff(n);
        Monomial zn = Monomial::var(z, n);
        for (auto& t : c.terms()) acc.add(t.mono * zn, t.coeff * Rational(n + 1));
    }
    return acc.build();
}

TruncSeries p_series(const FormalGroupLaw& f, int cap, VarId z) { return invert_unit(inv_p_series(f, cap, z)); }

TruncSeries fgl_specialize(const TruncSeries& value, const FormalGroupLaw& target) {
    int maxm = 0;
    for (auto& t : value.terms())
        for (auto& [v, e] : t.mono.entries())
            if (v.kind == VarKind::M) maxm = std::max(maxm, v.index);
    if (target.kind() == FormalGroupLaw::Kind::Universal) return value;
    std::map<VarId, TruncSeries> assign;
    for (int n = 1; n <= maxm; ++n) assign.emplace(VarId::m(n), target.log_coeff(n));
    return substitute(value, assign);
}

}  // namespace sf
