#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace kromatic {

// Integer partition: nonincreasing positive parts. The ordering used
// everywhere (maps, serialization) is by total weight, then by parts
// lexicographically descending, so (2) sorts before (1,1).
class Partition {
public:
    Partition() = default;  // the empty partition
    explicit Partition(std::vector<int> parts);
    // Exponent notation: mult[j] parts equal to j, 1-indexed by size.
    static Partition from_multiplicities(std::span<const int> mult);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const { return parts_.empty(); }
    // multiplicities()[j] = number of parts equal to j (index 0 unused)
    std::vector<int> multiplicities() const;

    std::string to_string() const;  // "2,1,1"; "-" for the empty partition

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
};

// Every partition with max part, length, and weight within the given bounds,
// each exactly once, in the canonical order above.
std::vector<Partition> partitions_bounded(int max_part, int max_length, int max_weight);

}  // namespace kromatic
