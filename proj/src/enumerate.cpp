#include "csf/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace csf {

namespace {

// Beyer-Hedetniemi successor on canonical level sequences (root level 0).
// Returns false when the star sequence (the last one) was given.
bool next_rooted_level_sequence(std::vector<int>& seq) {
    size_t p = seq.size() - 1;
    while (p > 0 && seq[p] == 1) --p;
    if (p == 0) return false;
    size_t q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
    return true;
}

Graph level_sequence_to_tree(const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 1; i < seq.size(); ++i) {
        size_t j = i - 1;
        while (seq[j] != seq[i] - 1) --j;
        edges.emplace_back(static_cast<int>(j), static_cast<int>(i));
    }
    return Graph(static_cast<int>(seq.size()), std::move(edges));
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 16");
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1);
        return out;
    }
    std::vector<int> seq(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<size_t>(i)] = i;  // the path comes first
    std::unordered_set<std::string> seen;
    while (true) {
        Graph t = level_sequence_to_tree(seq);
        if (seen.insert(canonical_tree_code(t)).second) out.push_back(std::move(t));
        if (!next_rooted_level_sequence(seq)) break;
    }
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("enumerate_connected_graphs supports 1 <= n <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        Graph g(n, std::move(edges));
        if (!is_connected(g)) continue;
        if (seen.insert(canonical_graph_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> unicyclic_supergraphs(int n) {
    std::vector<Graph> out;
    for (const Graph& t : enumerate_trees(n)) {
        std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                           std::vector<bool>(static_cast<size_t>(n), false));
        for (const auto& [u, v] : t.edges())
            adj[static_cast<size_t>(u)][static_cast<size_t>(v)] =
                adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
                auto edges = t.edges();
                edges.emplace_back(u, v);
                out.emplace_back(n, std::move(edges));
            }
    }
    return out;
}

}  // namespace csf
