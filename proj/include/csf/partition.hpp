#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csf/numbers.hpp"

namespace csf {

// Integer partition: weakly decreasing sequence of positive parts.
// Weight is capped at 64; everything in this library indexes by partitions
// of the vertex count of a small graph.
class Partition {
public:
    Partition() = default;
    // Sorts descending and validates parts >= 1.
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    // Multiplicity of part value k.
    int multiplicity(int k) const;
    // Number of parts of even size (epsilon in the positivity check).
    int even_part_count() const;
    // Smallest part, or 0 for the empty partition.
    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }

    Partition conjugate() const;
    // Multiset union of parts (index of a power-sum product).
    Partition merged_with(const Partition& other) const;
    // Removes one copy of `value`; false if absent.
    bool remove_one(int value);

    bool operator==(const Partition&) const = default;

    // "[3,1,1]", no spaces; "[]" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

// Canonical total order: length ascending, then lexicographically descending
// on parts. Fixes all serialization and map iteration orders.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n in canonical order. n = 0 yields the empty partition.
std::vector<Partition> partitions_of(int n);

}  // namespace csf
