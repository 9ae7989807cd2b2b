#include "symfun/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sf {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad partition entry: " + item);
        parts.push_back(v);
    }
    return Partition(parts);
}

Partition Partition::rho(int n) {
    std::vector<int> p;
    for (int i = n; i >= 1; --i) p.push_back(i);
    return Partition(p);
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::contained_in(const Partition& o) const {
    if (length() > o.length()) return false;
    for (int i = 1; i <= length(); ++i)
        if ((*this)[i] > o[i]) return false;
    return true;
}

Partition Partition::operator+(const Partition& o) const {
    int len = std::max(length(), o.length());
    std::vector<int> p(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i) p[static_cast<std::size_t>(i - 1)] = (*this)[i] + o[i];
    return Partition(p);
}

std::string Partition::str() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

namespace {
void gen(int remaining, int maxpart, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        cur.push_back(p);
        gen(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int w, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(w, w, max_len, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int w, int max_len) {
    std::vector<Partition> out;
    for (int k = 0; k <= w; ++k)
        for (auto& p : partitions_of(k, max_len)) out.push_back(p);
    return out;
}

std::vector<Partition> strict_partitions_up_to(int w, int max_len) {
    std::vector<Partition> out;
    for (auto& p : partitions_up_to(w, max_len))
        if (p.is_strict()) out.push_back(p);
    return out;
}

}  // namespace sf
