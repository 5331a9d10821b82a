#pragma once

#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

// Spider: tree with exactly one vertex of degree >= 3, described by its
// leg-length partition (>= 3 legs, weight n-1).
struct SpiderSpec {
    Partition legs;
    bool operator==(const SpiderSpec&) const = default;
    int order() const { return legs.weight() + 1; }
    std::string to_string() const;  // "spider[2,1,1]"
};

// Caterpillar: spine vertices v_0..v_s (s >= 1) with f_i leaves attached to
// v_i; f_0, f_s >= 1 so the spine is exactly the non-leaf set. The sequence
// is normalized up to reversal.
struct CaterpillarSpec {
    std::vector<int> leaf_numbers;
    bool operator==(const CaterpillarSpec&) const = default;
    int order() const;
    std::string to_string() const;  // "caterpillar(1,2,3)"
};

// Squid: cycle of length g >= 3 with tentacle paths (>= 1) at one vertex.
struct SquidSpec {
    int cycle_length = 0;
    Partition tentacles;
    bool operator==(const SquidSpec&) const = default;
    int order() const { return cycle_length + tentacles.weight(); }
    std::string to_string() const;  // "squid(g=3;[2,1])"
};

// Crab: cycle of length g >= 3 with f_i leaves at the i-th cycle vertex,
// normalized to the lexicographically minimal rotation/reflection.
struct CrabSpec {
    int cycle_length = 0;
    std::vector<int> leaf_counts;
    bool operator==(const CrabSpec&) const = default;
    int order() const;
    std::string to_string() const;  // "crab(g=3;(1,2,3))"
};

CaterpillarSpec normalize_caterpillar(std::vector<int> leaf_numbers);
CrabSpec normalize_crab(int cycle_length, std::vector<int> leaf_counts);

Graph build_spider(const SpiderSpec& spec);
Graph build_caterpillar(const CaterpillarSpec& spec);
Graph build_squid(const SquidSpec& spec);
Graph build_crab(const CrabSpec& spec);

// Structural spec extraction; throws when the graph is not in the family.
SpiderSpec spider_spec_of(const Graph& g);
CaterpillarSpec caterpillar_spec_of(const Graph& g);
SquidSpec squid_spec_of(const Graph& g);
CrabSpec crab_spec_of(const Graph& g);

// One representative per isomorphism class of the given order,
// deterministic order.
std::vector<SpiderSpec> enumerate_spiders(int n);
std::vector<CaterpillarSpec> enumerate_caterpillars(int n);
std::vector<SquidSpec> enumerate_squids(int n);
std::vector<CrabSpec> enumerate_crabs(int n);

}  // namespace csf
