#include "symfun/monomial.hpp"

#include <cstring>
#include <stdexcept>

namespace sf {

namespace {
constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
}

std::string VarId::name() const {
    switch (kind) {
        case VarKind::X: return "x" + std::to_string(index);
        case VarKind::B: return "b" + std::to_string(index);
        case VarKind::U: return "u" + std::to_string(index);
        case VarKind::T: return "t";
        case VarKind::BETA: return "beta";
        case VarKind::M: return "m" + std::to_string(index);
    }
    return "?";
}

VarId VarId::parse(const std::string& s) {
    if (s == "t") return t();
    if (s == "beta") return beta();
    if (s.size() >= 2) {
        int idx = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad variable name: " + s);
            idx = idx * 10 + (s[i] - '0');
            if (idx > 1000) throw std::invalid_argument("bad variable name: " + s);
        }
        if (idx >= 1) {
            switch (s[0]) {
                case 'x': return x(idx);
                case 'b': return b(idx);
                case 'u': return u(idx);
                case 'm': return m(idx);
                default: break;
            }
        }
    }
    throw std::invalid_argument("bad variable name: " + s);
}

int slot_of(VarId v) {
    auto check = [&](int max) {
        if (v.index < 1 || v.index > max)
            throw std::out_of_range("variable " + v.name() + " outside supported range (max index " +
                                    std::to_string(max) + ")");
    };
    switch (v.kind) {
        case VarKind::X: check(kMaxX); return kSlotX + v.index - 1;
        case VarKind::B: check(kMaxB); return kSlotB + v.index - 1;
        case VarKind::U: check(kMaxU); return kSlotU + v.index - 1;
        case VarKind::T: return kSlotT;
        case VarKind::BETA: return kSlotBeta;
        case VarKind::M: check(kMaxM); return kSlotM + v.index - 1;
    }
    throw std::logic_error("bad VarKind");
}

VarId var_of_slot(int s) {
    if (s < kSlotB) return VarId::x(s - kSlotX + 1);
    if (s < kSlotU) return VarId::b(s - kSlotB + 1);
    if (s < kSlotT) return VarId::u(s - kSlotU + 1);
    if (s == kSlotT) return VarId::t();
    if (s == kSlotBeta) return VarId::beta();
    return VarId::m(s - kSlotM + 1);
}

Monomial Monomial::var(VarId v, int e) {
    Monomial m;
    m.set(v, e);
    return m;
}

void Monomial::set(VarId v, int e) { set_slot(slot_of(v), e); }

void Monomial::set_slot(int slot, int e) {
    if (e < 0 || e > 127) throw std::overflow_error("exponent out of range");
    bytes()[slot] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    std::uint64_t hi = 0;
    for (int i = 0; i < kWords; ++i) {
        r.w_[i] = w_[i] + o.w_[i];
        hi |= r.w_[i];
    }
    if (hi & kHigh) throw std::overflow_error("monomial exponent overflow");
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < kWords; ++i)
        if ((((o.w_[i] | kHigh) - w_[i]) & kHigh) != kHigh) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] - d.w_[i];
    return r;
}

std::vector<std::pair<VarId, int>> Monomial::entries() const {
    std::vector<std::pair<VarId, int>> out;
    const auto* b = bytes();
    for (int s = 0; s < kSlots; ++s)
        if (b[s]) out.emplace_back(var_of_slot(s), b[s]);
    return out;
}

std::string Monomial::str() const {
    std::string s;
    for (auto& [v, e] : entries()) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    const auto* pa = a.bytes();
    const auto* pb = b.bytes();
    for (int s = 0; s < kSlots; ++s)
        if (pa[s] != pb[s]) return pa[s] > pb[s];
    return false;
}

}  // namespace sf
