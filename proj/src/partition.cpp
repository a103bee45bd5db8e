#include "kromatic/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kromatic/errors.hpp"

namespace kromatic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_multiplicities(std::span<const int> mult) {
    std::vector<int> parts;
    for (int j = static_cast<int>(mult.size()) - 1; j >= 1; --j) {
        if (mult[j] < 0) throw DomainError("negative part multiplicity");
        parts.insert(parts.end(), mult[j], j);
    }
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::multiplicities() const {
    std::vector<int> mult(max_part() + 1, 0);
    for (int p : parts_) ++mult[p];
    return mult;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) return c;
    // same weight: lexicographically larger part sequence sorts first
    if (parts_ == other.parts_) return std::strong_ordering::equal;
    return parts_ > other.parts_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Partition> partitions_bounded(int max_part, int max_length, int max_weight) {
    if (max_part < 1 || max_length < 1 || max_weight < 1)
        throw DomainError("partition bounds must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int largest, int remaining) {
        if (!cur.empty()) out.emplace_back(std::vector<int>(cur));
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int p = std::min(largest, remaining); p >= 1; --p) {
            cur.push_back(p);
            rec(p, remaining - p);
            cur.pop_back();
        }
    };
    rec(max_part, max_weight);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kromatic
