#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/partition.hpp"

namespace csf {

// Subset of a host graph's edges as a bitmask over edge indices.
using EdgeSubset = std::uint64_t;

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// (u < v), deduplicated, sorted; at most 62 edges so subsets fit one word.
class Graph {
public:
    explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    EdgeSubset full_edge_set() const;

    int degree(int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// Multiset of component orders of the spanning subgraph (V, a), as a
// partition of n. Union-find.
Partition components_type(const Graph& g, EdgeSubset a);

int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Shortest cycle length; nullopt for acyclic graphs.
std::optional<int> girth_direct(const Graph& g);

struct GraphClass {
    bool connected = false;
    bool tree = false;
    bool unicyclic = false;
    bool spider = false;
    bool caterpillar = false;
    bool squid = false;
    bool crab = false;
    bool star = false;
    bool path = false;
};

// Structural predicates computed directly from the graph, never from X.
GraphClass classify(const Graph& g);

// Vertices of the unique cycle of a connected unicyclic graph.
std::vector<int> cycle_vertices(const Graph& g);

// All connected edge subsets with >= 1 edge, ascending mask order.
std::vector<EdgeSubset> subtrees(const Graph& t);
// Edges of `s` with an endpoint of degree 1 inside s.
EdgeSubset leaf_edges(const Graph& t, EdgeSubset s);

// Unique minimal K(A) disjoint from A with A union K(A) a subtree.
EdgeSubset connector(const Graph& t, EdgeSubset a);

// Canonical code of a free tree: AHU encoding rooted at the center
// (minimum of both encodings for bicentral trees).
std::string canonical_tree_code(const Graph& t);
// Lexicographically minimal adjacency matrix over all vertex permutations;
// n <= 8.
std::string canonical_graph_code(const Graph& g);

// Edge-list text format: optional header "n <count>", one "u v" pair per
// line, '#' comments and blank lines ignored. Without a header,
// n = 1 + max vertex index. Malformed input throws with a line/column
// diagnostic.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace csf
