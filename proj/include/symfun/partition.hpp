#pragma once

#include <string>
#include <vector>

namespace sf {

// Weakly decreasing sequence of positive integers; trailing zeros are stripped.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& csv);
    // (n, n-1, ..., 1)
    static Partition rho(int n);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool is_strict() const;
    // 1-based part, zero past the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    // Diagram containment: this inside o.
    bool contained_in(const Partition& o) const;
    Partition operator+(const Partition& o) const;
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

// All partitions of weight exactly w with at most max_len parts (max_len < 0: unbounded).
std::vector<Partition> partitions_of(int w, int max_len = -1);
// All partitions with weight <= w.
std::vector<Partition> partitions_up_to(int w, int max_len = -1);
std::vector<Partition> strict_partitions_up_to(int w, int max_len = -1);

}  // namespace sf
