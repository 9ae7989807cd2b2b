#include "symfun/laurent.hpp"

#include <memory>

namespace sf {

int LaurentShape::key_cap(const LaurentKey& e) const {
    int c = cap;
    int s = 0;
    for (int k = 0; k < kMaxU; ++k) {
        if (k >= r) {
            if (e[static_cast<std::size_t>(k)]) return -1;
            continue;
        }
        s += e[static_cast<std::size_t>(k)];
        c = std::min(c, bounds[static_cast<std::size_t>(k)] - s);
    }
    return c;
}

LaurentShape LaurentShape::widened(int i, int d) const {
    LaurentShape s = *this;
    for (int k = i; k <= r; ++k) s.bounds[static_cast<std::size_t>(k - 1)] += d;
    return s;
}

namespace {

LaurentKey add_keys(const LaurentKey& a, const LaurentKey& b) {
    LaurentKey c;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

// min over terms and over prefixes of P_k = S_k(e) + weight
void check_region(const LaurentShape& shape, const LaurentKey& e, const TruncSeries& c) {
    if (c.is_zero()) return;
    int w = c.min_weight();
    int s = 0;
    for (int k = 0; k < shape.r; ++k) {
        s += e[static_cast<std::size_t>(k)];
        if (s + w < 0) throw RegionError("term leaves the expansion region");
    }
}

using BuilderMap = std::map<LaurentKey, std::unique_ptr<SeriesBuilder>>;

SeriesBuilder& builder_for(BuilderMap& m, const LaurentKey& e, int cap) {
    auto it = m.find(e);
    if (it == m.end()) it = m.emplace(e, std::make_unique<SeriesBuilder>(cap)).first;
    return *it->second;
}

}  // namespace

void MultiLaurent::put(const LaurentKey& e, TruncSeries c) {
    if (c.is_zero()) return;
    terms_[e] = std::move(c);
}

MultiLaurent MultiLaurent::constant(const LaurentShape& shape, const TruncSeries& c) {
    MultiLaurent out(shape);
    int kc = shape.key_cap(LaurentKey{});
    if (kc >= 0) out.put(LaurentKey{}, c.truncate(kc));
    return out;
}

MultiLaurent MultiLaurent::u(const LaurentShape& shape, int i) {
    MultiLaurent out(shape);
    LaurentKey e{};
    e[static_cast<std::size_t>(i - 1)] = 1;
    int kc = shape.key_cap(e);
    if (kc >= 0) out.put(e, TruncSeries::constant(Rational(1), kc));
    return out;
}

MultiLaurent MultiLaurent::power_series(const LaurentShape& shape, int i, const std::vector<TruncSeries>& coeffs) {
    MultiLaurent out(shape);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        LaurentKey e{};
        e[static_cast<std::size_t>(i - 1)] = static_cast<int>(k);
        int kc = shape.key_cap(e);
        if (kc < 0) break;
        out.put(e, coeffs[k].truncate(kc));
    }
    return out;
}

MultiLaurent MultiLaurent::embed(const LaurentShape& shape, const TruncSeries& h, const Image& a, const Image& b,
                                 const LaurentKey& shift) {
    const int sa = slot_of(VarId::u(1)), sb = slot_of(VarId::u(2));
    BuilderMap acc;
    std::map<std::pair<int, int>, TruncSeries> powers;  // (which, exponent)
    auto power = [&](int which, int e, int cap) -> const TruncSeries& {
        auto key = std::make_pair(which, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
            const TruncSeries& v = which == 0 ? a.value : b.value;
            it = powers.emplace(key, v.truncate(shape.cap).pow(e)).first;
        }
        (void)cap;
        return it->second;
    };
    for (auto& t : h.terms()) {
        int ea = t.mono.at(sa), eb = t.mono.at(sb);
        LaurentKey e = shift;
        if (a.u_index) e[static_cast<std::size_t>(a.u_index - 1)] += ea;
        if (b.u_index) e[static_cast<std::size_t>(b.u_index - 1)] += eb;
        int kc = shape.key_cap(e);
        if (kc < 0) continue;
        Monomial rest = t.mono;
        rest.set_slot(sa, 0);
        rest.set_slot(sb, 0);
        if (rest.weight() > kc) continue;
        SeriesBuilder& sbld = builder_for(acc, e, kc);
        TruncSeries f = TruncSeries::monomial(rest, t.coeff, kc);
        if (!a.u_index && ea) f = mul(f, power(0, ea, kc));
        if (!b.u_index && eb) f = mul(f, power(1, eb, kc));
        sbld.add(f);
    }
    MultiLaurent out(shape);
    for (auto& [e, bld] : acc) {
        TruncSeries c = bld->build();
        check_region(shape, e, c);
        out.put(e, std::move(c));
    }
    return out;
}

TruncSeries MultiLaurent::coefficient(const LaurentKey& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return TruncSeries(std::max(0, shape_.key_cap(e)));
    return it->second;
}

MultiLaurent MultiLaurent::scale(const TruncSeries& c) const {
    MultiLaurent out(shape_);
    for (auto& [e, s] : terms_) {
        SeriesBuilder b(s.cap());
        mul_accumulate(b, s, c, s.cap());
        out.put(e, b.build());
    }
    return out;
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent out(shape_);
    for (auto& [e, s] : terms_) out.put(e, -s);
    return out;
}

MultiLaurent operator+(const MultiLaurent& a, const MultiLaurent& b) {
    if (!(a.shape_ == b.shape_)) throw std::logic_error("MultiLaurent shapes differ");
    MultiLaurent out = a;
    for (auto& [e, s] : b.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, s);
        } else {
            it->second = add(it->second, s);
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

MultiLaurent operator-(const MultiLaurent& a, const MultiLaurent& b) { return a + (-b); }

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    if (!(a.shape_ == b.shape_)) throw std::logic_error("MultiLaurent shapes differ");
    BuilderMap acc;
    for (auto& [ea, sa] : a.terms_)
        for (auto& [eb, sb] : b.terms_) {
            LaurentKey e = add_keys(ea, eb);
            int kc = a.shape_.key_cap(e);
            if (kc < 0) continue;
            mul_accumulate(builder_for(acc, e, kc), sa, sb, kc);
        }
    MultiLaurent out(a.shape_);
    for (auto& [e, bld] : acc) out.put(e, bld->build());
    return out;
}

TruncSeries product_coefficient(const MultiLaurent& a, const MultiLaurent& b, const LaurentKey& e) {
    int kc = a.shape_.key_cap(e);
    if (kc < 0) return TruncSeries(0);
    SeriesBuilder acc(kc);
    for (auto& [ea, sa] : a.terms_) {
        LaurentKey eb;
        for (std::size_t k = 0; k < eb.size(); ++k) eb[k] = e[k] - ea[k];
        auto it = b.terms_.find(eb);
        if (it != b.terms_.end()) mul_accumulate(acc, sa, it->second, kc);
    }
    return acc.build();
}

MultiLaurent MultiLaurent::shifted(const LaurentKey& e, const LaurentShape& target) const {
    MultiLaurent out(target);
    for (auto& [k, s] : terms_) {
        LaurentKey nk = add_keys(k, e);
        check_region(target, nk, s);
        int kc = target.key_cap(nk);
        if (kc < 0) continue;
        TruncSeries c = s.truncate(kc);
        out.put(nk, std::move(c));
    }
    return out;
}

MultiLaurent MultiLaurent::divide_coefficients(const TruncSeries& d) const {
    MultiLaurent out(shape_);
    for (auto& [e, s] : terms_) out.put(e, exact_divide(s.with_cap(kNoCap), d).truncate(s.cap()));
    return out;
}

MultiLaurent MultiLaurent::restrict_prefix(int k, const std::vector<int>& prefix) const {
    MultiLaurent out(shape_);
    for (auto& [e, s] : terms_) {
        int sum = 0;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            sum += e[static_cast<std::size_t>(j)];
            ok = sum == prefix[static_cast<std::size_t>(j)];
        }
        if (ok) out.terms_.emplace(e, s);
    }
    return out;
}

MultiLaurent MultiLaurent::filtered(const std::function<bool(const LaurentKey&)>& keep) const {
    MultiLaurent out(shape_);
    for (auto& [e, s] : terms_)
        if (keep(e)) out.terms_.emplace(e, s);
    return out;
}

MultiLaurent MultiLaurent::inverse() const {
    auto it = terms_.find(LaurentKey{});
    if (it == terms_.end()) throw NotAUnit("MultiLaurent has no constant term");
    Rational c = it->second.constant_term();
    if (c.is_zero()) throw NotAUnit("MultiLaurent constant term vanishes");
    for (auto& t : it->second.terms())
        if (t.mono.weight() == 0 && !t.mono.is_one())
            throw NotAUnit("MultiLaurent constant term is not a rational number");
    Rational ci = c.inverse();
    // s = a / c - 1 is nilpotent; 1 / (1 + s) = sum (-s)^k
    MultiLaurent s = scale(TruncSeries::constant(ci)) - constant(shape_, TruncSeries::constant(Rational(1)));
    MultiLaurent result = constant(shape_, TruncSeries::constant(ci));
    MultiLaurent p = constant(shape_, TruncSeries::constant(ci));
    MultiLaurent ms = -s;
    while (true) {
        p = p * ms;
        if (p.is_zero()) break;
        result = result + p;
    }
    return result;
}

}  // namespace sf
