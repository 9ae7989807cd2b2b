#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sf {

enum class VarKind : std::uint8_t { X, B, U, T, BETA, M };

// Variable identifier. Ordering is kind first, then index.
struct VarId {
    VarKind kind;
    int index;  // 0 for T and BETA

    static VarId x(int i) { return {VarKind::X, i}; }
    static VarId b(int i) { return {VarKind::B, i}; }
    static VarId u(int i) { return {VarKind::U, i}; }
    static VarId t() { return {VarKind::T, 0}; }
    static VarId beta() { return {VarKind::BETA, 0}; }
    static VarId m(int i) { return {VarKind::M, i}; }

    bool geometric() const { return kind == VarKind::X || kind == VarKind::B || kind == VarKind::U; }
    std::string name() const;
    static VarId parse(const std::string& s);

    friend bool operator==(const VarId& a, const VarId& b) { return a.kind == b.kind && a.index == b.index; }
    friend bool operator<(const VarId& a, const VarId& b) {
        return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
    }
};

// Fixed slot layout; each exponent is one byte.
inline constexpr int kMaxX = 8;
inline constexpr int kMaxB = 12;
inline constexpr int kMaxU = 4;
inline constexpr int kMaxM = 22;
inline constexpr int kSlotX = 0;
inline constexpr int kSlotB = kSlotX + kMaxX;
inline constexpr int kSlotU = kSlotB + kMaxB;
inline constexpr int kSlotT = kSlotU + kMaxU;
inline constexpr int kSlotBeta = kSlotT + 1;
inline constexpr int kSlotM = kSlotBeta + 1;
inline constexpr int kSlots = kSlotM + kMaxM;
inline constexpr int kWords = kSlots / 8;
static_assert(kSlots == 48 && kSlotT == 24);

// Slot of a variable; throws std::out_of_range if the index exceeds the layout.
int slot_of(VarId v);
VarId var_of_slot(int slot);

// Packed monomial. Exponents live in bytes; every exponent stays below 128.
class Monomial {
public:
    Monomial() : w_{} {}
    static Monomial var(VarId v, int e = 1);

    int exponent(VarId v) const { return bytes()[slot_of(v)]; }
    int at(int slot) const { return bytes()[slot]; }
    void set(VarId v, int e);
    void set_slot(int slot, int e);

    // Total exponent over X, B and U variables.
    int weight() const {
        return static_cast<int>(bytesum(w_[0]) + bytesum(w_[1]) + bytesum(w_[2]));
    }
    bool is_one() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    // Geometric weight zero (only T, BETA, M exponents).
    bool weight_zero() const { return (w_[0] | w_[1] | w_[2]) == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Requires divides(o).
    Monomial quotient(const Monomial& divisor) const;

    std::vector<std::pair<VarId, int>> entries() const;
    std::string str() const;

    const std::uint8_t* bytes() const { return reinterpret_cast<const std::uint8_t*>(w_.data()); }
    std::uint8_t* bytes() { return reinterpret_cast<std::uint8_t*>(w_.data()); }
    const std::array<std::uint64_t, kWords>& words() const { return w_; }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 32));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.w_ != b.w_; }

private:
    static std::uint64_t bytesum(std::uint64_t w) { return (w * 0x0101010101010101ULL) >> 56; }
    std::array<std::uint64_t, kWords> w_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Canonical order: geometric weight ascending, then lexicographic in VarId order
// with larger exponents first.
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace sf
