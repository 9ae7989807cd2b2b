#include "symfun/series.hpp"

#include <algorithm>
#include <numeric>

#include <absl/container/flat_hash_map.h>

namespace sf {

namespace {

void sort_canonical(std::vector<Term>& v) {
    // Byte-wise descending order equals descending order of the byte-swapped words.
    struct Key {
        int weight;
        std::array<std::uint64_t, kWords> be;
        std::size_t index;
    };
    std::vector<Key> idx(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        idx[i].weight = v[i].mono.weight();
        for (int k = 0; k < kWords; ++k) idx[i].be[static_cast<std::size_t>(k)] = __builtin_bswap64(v[i].mono.words()[static_cast<std::size_t>(k)]);
        idx[i].index = i;
    }
    std::sort(idx.begin(), idx.end(), [](const Key& a, const Key& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.be > b.be;
    });
    std::vector<Term> out;
    out.reserve(v.size());
    for (auto& k : idx) out.push_back(std::move(v[k.index]));
    v = std::move(out);
}

int min_cap(int a, int b) { return std::min(a, b); }

}  // namespace

struct SeriesBuilder::Impl {
    absl::flat_hash_map<Monomial, Rational, MonomialHash> map;
};

SeriesBuilder::SeriesBuilder(int cap, std::size_t reserve) : impl_(new Impl), cap_(cap) {
    if (reserve) impl_->map.reserve(reserve);
}

SeriesBuilder::~SeriesBuilder() { delete impl_; }

void SeriesBuilder::add(const Monomial& m, const Rational& c) {
    if (c.is_zero() || m.weight() > cap_) return;
    impl_->map[m] += c;
}

void SeriesBuilder::add_mul(const Monomial& m, const Rational& a, const Rational& b) {
    impl_->map[m].add_mul(a, b);
}

void SeriesBuilder::add(const TruncSeries& s, const Rational& scale) {
    if (scale.is_zero()) return;
    for (auto& t : s.terms()) {
        if (t.mono.weight() > cap_) continue;
        impl_->map[t.mono].add_mul(t.coeff, scale);
    }
}

TruncSeries SeriesBuilder::build() {
    TruncSeries r(cap_);
    r.terms_.reserve(impl_->map.size());
    for (auto& [m, c] : impl_->map)
        if (!c.is_zero()) r.terms_.push_back(Term{m, std::move(c)});
    impl_->map.clear();
    sort_canonical(r.terms_);
    return r;
}

TruncSeries::TruncSeries(std::vector<Term> terms, int cap) : cap_(cap) {
    SeriesBuilder b(cap, terms.size());
    for (auto& t : terms) b.add(t.mono, t.coeff);
    *this = b.build();
}

TruncSeries TruncSeries::from_canonical(std::vector<Term> terms, int cap) {
    TruncSeries r(cap);
    r.terms_ = std::move(terms);
    return r;
}

TruncSeries TruncSeries::constant(const Rational& c, int cap) {
    TruncSeries r(cap);
    if (!c.is_zero()) r.terms_.push_back(Term{Monomial(), c});
    return r;
}

TruncSeries TruncSeries::variable(VarId v, int cap) { return monomial(Monomial::var(v), Rational(1), cap); }

TruncSeries TruncSeries::monomial(const Monomial& m, const Rational& c, int cap) {
    TruncSeries r(cap);
    if (!c.is_zero() && m.weight() <= cap) r.terms_.push_back(Term{m, c});
    return r;
}

Rational TruncSeries::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term& t, const Monomial& key) { return canonical_less(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

int TruncSeries::min_weight() const { return terms_.empty() ? -1 : terms_.front().mono.weight(); }
int TruncSeries::max_weight() const { return terms_.empty() ? -1 : terms_.back().mono.weight(); }

int TruncSeries::degree_in(VarId v) const {
    int s = slot_of(v), d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono.at(s));
    return d;
}

bool TruncSeries::mentions(VarKind k) const {
    for (auto& t : terms_)
        for (auto& [v, e] : t.mono.entries())
            if (v.kind == k) return true;
    return false;
}

TruncSeries TruncSeries::truncate(int cap) const {
    TruncSeries r(std::min(cap, cap_));
    for (auto& t : terms_) {
        if (t.mono.weight() > r.cap_) break;
        r.terms_.push_back(t);
    }
    return r;
}

TruncSeries TruncSeries::with_cap(int cap) const {
    TruncSeries r = truncate(cap);
    r.cap_ = cap;
    return r;
}

TruncSeries TruncSeries::component(int w) const {
    TruncSeries r(cap_);
    for (auto& t : terms_) {
        int tw = t.mono.weight();
        if (tw > w) break;
        if (tw == w) r.terms_.push_back(t);
    }
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(cap_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
    return r;
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    int cap = min_cap(a.cap(), b.cap());
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && canonical_less(ia->mono, ib->mono))) {
            if (ia->mono.weight() <= cap) out.push_back(*ia);
            ++ia;
        } else if (ia == ea || canonical_less(ib->mono, ia->mono)) {
            if (ib->mono.weight() <= cap) out.push_back(*ib);
            ++ib;
        } else {
            Rational c = ia->coeff + ib->coeff;
            if (!c.is_zero() && ia->mono.weight() <= cap) out.push_back(Term{ia->mono, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return TruncSeries::from_canonical(std::move(out), cap);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.is_zero() && o.cap_ >= cap_) return *this;
    *this = add(*this, o);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return add(a, -b); }

void mul_accumulate(SeriesBuilder& acc, const TruncSeries& a, const TruncSeries& b, int cap, const Rational& scale) {
    if (a.is_zero() || b.is_zero() || cap < 0) return;
    const TruncSeries& outer = a.size() <= b.size() ? a : b;
    const TruncSeries& inner = a.size() <= b.size() ? b : a;
    int maxw = inner.max_weight();
    std::vector<std::size_t> end(static_cast<std::size_t>(maxw) + 1, 0);
    {
        std::size_t i = 0;
        for (int w = 0; w <= maxw; ++w) {
            while (i < inner.size() && inner.terms()[i].mono.weight() <= w) ++i;
            end[static_cast<std::size_t>(w)] = i;
        }
    }
    bool unit = scale.is_one();
    for (auto& ta : outer.terms()) {
        int wa = ta.mono.weight();
        long lim = cap == kNoCap ? maxw : std::min<long>(maxw, static_cast<long>(cap) - wa);
        if (lim < 0) break;
        std::size_t e = end[static_cast<std::size_t>(lim)];
        const Term* tb = inner.terms().data();
        if (unit) {
            for (std::size_t j = 0; j < e; ++j) acc.add_mul(ta.mono * tb[j].mono, ta.coeff, tb[j].coeff);
        } else {
            Rational c = ta.coeff * scale;
            for (std::size_t j = 0; j < e; ++j) acc.add_mul(ta.mono * tb[j].mono, c, tb[j].coeff);
        }
    }
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    int cap = min_cap(a.cap(), b.cap());
    if (a.is_zero() || b.is_zero()) return TruncSeries(cap);
    SeriesBuilder acc(cap, std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 14));
    mul_accumulate(acc, a, b, cap);
    return acc.build();
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) {
    *this = mul(*this, o);
    return *this;
}

TruncSeries TruncSeries::scaled(const Rational& c) const {
    TruncSeries r(cap_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back(Term{t.mono, t.coeff * c});
    return r;
}

TruncSeries TruncSeries::times_monomial(const Monomial& m, const Rational& c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
    return TruncSeries(std::move(out), cap_);
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) throw std::domain_error("negative power");
    TruncSeries result = constant(Rational(1), cap_);
    TruncSeries base = *this;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int cap = min_cap(a.cap(), b.cap());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (true) {
        while (ia != ea && ia->mono.weight() > cap) ++ia;
        while (ib != eb && ib->mono.weight() > cap) ++ib;
        if (ia == ea || ib == eb) return ia == ea && ib == eb;
        if (ia->mono != ib->mono || ia->coeff != ib->coeff) return false;
        ++ia;
        ++ib;
    }
}

bool TruncSeries::identical(const TruncSeries& o) const {
    if (cap_ != o.cap_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms_) {
        std::string c = t.coeff.str();
        bool neg = t.coeff.sign() < 0;
        if (neg) c = c.substr(1);
        if (!first) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        first = false;
        if (t.mono.is_one()) s += c;
        else if (c == "1") s += t.mono.str();
        else s += c + "*" + t.mono.str();
    }
    return s;
}

TruncSeries invert_unit(const TruncSeries& a) {
    if (!a.finite_cap()) throw InfiniteCap("invert_unit needs a finite cap");
    Rational c0;
    for (auto& t : a.terms()) {
        if (t.mono.weight() > 0) break;
        if (!t.mono.is_one()) throw NotAUnit("weight-0 part is not a rational constant: " + t.mono.str());
        c0 = t.coeff;
    }
    if (c0.is_zero()) throw NotAUnit("weight-0 part is zero");
    int cap = a.cap();
    Rational inv = c0.inverse();
    Rational neg_inv = -inv;
    std::vector<TruncSeries> comp(static_cast<std::size_t>(cap) + 1, TruncSeries(cap));
    for (int w = 1; w <= cap; ++w) comp[static_cast<std::size_t>(w)] = a.component(w);
    std::vector<TruncSeries> s(static_cast<std::size_t>(cap) + 1, TruncSeries(cap));
    s[0] = TruncSeries::constant(inv, cap);
    for (int w = 1; w <= cap; ++w) {
        SeriesBuilder acc(cap);
        for (int j = 1; j <= w; ++j) {
            const auto& aj = comp[static_cast<std::size_t>(j)];
            const auto& sk = s[static_cast<std::size_t>(w - j)];
            if (aj.is_zero() || sk.is_zero()) continue;
            for (auto& ta : aj.terms())
                for (auto& tb : sk.terms()) acc.add_mul(ta.mono * tb.mono, ta.coeff, tb.coeff);
        }
        s[static_cast<std::size_t>(w)] = acc.build().scaled(neg_inv);
    }
    SeriesBuilder out(cap);
    for (auto& sw : s) out.add(sw);
    return out.build();
}

TruncSeries exact_divide(const TruncSeries& num, const TruncSeries& den) {
    if (den.is_zero()) throw NotDivisible("division by zero series");
    const Term& lead = den.terms().front();
    int w0 = lead.mono.weight();
    int qcap = num.cap() == kNoCap ? kNoCap : num.cap() - w0;
    if (qcap < 0) return TruncSeries(0);
    int wlimit = num.cap() == kNoCap ? num.max_weight() : num.cap();
    auto less = [](const Monomial& x, const Monomial& y) { return canonical_less(x, y); };
    std::map<Monomial, Rational, decltype(less)> rem(less);
    for (auto& t : num.terms()) rem.emplace(t.mono, t.coeff);
    Rational lead_inv = lead.coeff.inverse();
    SeriesBuilder q(qcap);
    while (!rem.empty()) {
        auto it = rem.begin();
        if (it->first.weight() > wlimit) {
            if (num.cap() == kNoCap) throw NotDivisible("remainder term " + it->first.str());
            break;
        }
        if (!lead.mono.divides(it->first))
            throw NotDivisible("remainder term " + it->second.str() + "*" + it->first.str());
        Monomial qm = it->first.quotient(lead.mono);
        Rational qc = it->second * lead_inv;
        q.add(qm, qc);
        Rational neg = -qc;
        for (auto& t : den.terms()) {
            Monomial m = t.mono * qm;
            if (m.weight() > wlimit) continue;
            auto [jt, inserted] = rem.try_emplace(m);
            jt->second.add_mul(t.coeff, neg);
            if (jt->second.is_zero()) rem.erase(jt);
        }
    }
    return q.build();
}

TruncSeries substitute(const TruncSeries& a, const std::map<VarId, TruncSeries>& assignment) {
    int cap = a.cap();
    for (auto& [v, val] : assignment) {
        cap = min_cap(cap, val.cap());
        if (v.geometric() && a.finite_cap() && !val.is_zero() && val.min_weight() < 1)
            throw std::domain_error("substitution would lower the weight of " + v.name());
    }
    std::vector<std::pair<int, const TruncSeries*>> slots;
    for (auto& [v, val] : assignment) slots.emplace_back(slot_of(v), &val);
    std::map<std::pair<int, int>, TruncSeries> powers;
    auto power = [&](std::size_t k, int e) -> const TruncSeries& {
        auto key = std::make_pair(static_cast<int>(k), e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, slots[k].second->truncate(cap).pow(e)).first->second;
    };
    SeriesBuilder out(cap);
    for (auto& t : a.terms()) {
        Monomial rest = t.mono;
        TruncSeries factor = TruncSeries::constant(t.coeff, cap);
        bool touched = false;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            int e = rest.at(slots[k].first);
            if (!e) continue;
            rest.set_slot(slots[k].first, 0);
            factor = mul(factor, power(k, e));
            touched = true;
        }
        if (!touched) {
            out.add(t.mono, t.coeff);
            continue;
        }
        for (auto& ft : factor.terms()) out.add(ft.mono * rest, ft.coeff);
    }
    return out.build();
}

TruncSeries act_permutation(const TruncSeries& a, const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] < 1 || w[static_cast<std::size_t>(i)] > n || n > kMaxX)
            throw IndexOutOfRange("permutation entry out of range");
    std::vector<Term> out;
    out.reserve(a.size());
    for (auto& t : a.terms()) {
        Monomial m = t.mono;
        for (int i = n; i < kMaxX; ++i)
            if (m.at(kSlotX + i)) throw IndexOutOfRange("series mentions x" + std::to_string(i + 1));
        for (int i = 0; i < n; ++i) m.set_slot(kSlotX + w[static_cast<std::size_t>(i)] - 1, t.mono.at(kSlotX + i));
        out.push_back(Term{m, t.coeff});
    }
    return TruncSeries(std::move(out), a.cap());
}

}  // namespace sf
