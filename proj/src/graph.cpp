#include "csf/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace csf {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (edges_.size() > 62) throw std::invalid_argument("graphs with > 62 edges are unsupported");
}

EdgeSubset Graph::full_edge_set() const {
    return edges_.empty() ? 0 : ((EdgeSubset{1} << edges_.size()) - 1);
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<size_t>(n_), 0);
    for (const auto& [a, b] : edges_) {
        d[static_cast<size_t>(a)]++;
        d[static_cast<size_t>(b)]++;
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
    for (const auto& [a, b] : edges_) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    return adj;
}

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
        return true;
    }
};

}  // namespace

Partition components_type(const Graph& g, EdgeSubset a) {
    if (a & ~g.full_edge_set()) throw std::invalid_argument("subset uses unknown edge bits");
    UnionFind uf(g.order());
    for (int i = 0; i < g.edge_count(); ++i)
        if (a >> i & 1) uf.unite(g.edge(i).first, g.edge(i).second);
    std::vector<int> sizes;
    for (int v = 0; v < g.order(); ++v)
        if (uf.find(v) == v) sizes.push_back(uf.size[static_cast<size_t>(v)]);
    return Partition(std::move(sizes));
}

int component_count(const Graph& g) {
    return components_type(g, g.full_edge_set()).length();
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::optional<int> girth_direct(const Graph& g) {
    auto adj = g.adjacency();
    int best = -1;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<size_t>(g.order()), -1);
        std::vector<int> parent(static_cast<size_t>(g.order()), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[static_cast<size_t>(u)]) {
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<int> cycle_vertices(const Graph& g) {
    if (!is_connected(g) || g.edge_count() != g.order())
        throw std::invalid_argument("cycle_vertices expects a connected unicyclic graph");
    // strip degree-1 vertices until only the cycle remains
    std::vector<int> deg = g.degrees();
    std::vector<bool> removed(static_cast<size_t>(g.order()), false);
    auto adj = g.adjacency();
    std::queue<int> leaves;
    for (int v = 0; v < g.order(); ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop();
        removed[static_cast<size_t>(v)] = true;
        for (int w : adj[static_cast<size_t>(v)]) {
            if (removed[static_cast<size_t>(w)]) continue;
            if (--deg[static_cast<size_t>(w)] == 1) leaves.push(w);
        }
    }
    std::vector<int> cycle;
    for (int v = 0; v < g.order(); ++v)
        if (!removed[static_cast<size_t>(v)]) cycle.push_back(v);
    return cycle;
}

GraphClass classify(const Graph& g) {
    GraphClass cls;
    int n = g.order(), m = g.edge_count();
    cls.connected = is_connected(g);
    cls.tree = cls.connected && m == n - 1;
    cls.unicyclic = cls.connected && m == n;
    std::vector<int> deg = g.degrees();
    int branch = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d >= 3; }));
    int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    if (cls.tree) {
        cls.spider = branch == 1;
        cls.path = *std::max_element(deg.begin(), deg.end()) <= 2;
        cls.star = n - leaves == 1;
        // caterpillar: the non-leaf vertices induce a nontrivial path
        std::vector<int> spine;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] >= 2) spine.push_back(v);
        if (spine.size() >= 2) {
            std::vector<bool> on_spine(static_cast<size_t>(n), false);
            for (int v : spine) on_spine[static_cast<size_t>(v)] = true;
            auto adj = g.adjacency();
            bool ok = true;
            int ends = 0;
            for (int v : spine) {
                int d = 0;
                for (int w : adj[static_cast<size_t>(v)])
                    if (on_spine[static_cast<size_t>(w)]) ++d;
                if (d > 2) ok = false;
                if (d == 1) ++ends;
                if (d == 0) ok = false;  // disconnected spine inside a tree: impossible unless isolated
            }
            // induced forest with max degree 2 and two endpoints is a path
            cls.caterpillar = ok && ends == 2;
        }
    }
    if (cls.unicyclic) {
        cls.squid = branch == 1;  // exactly one vertex of degree > 2
        std::vector<int> cyc = cycle_vertices(g);
        std::vector<bool> on_cycle(static_cast<size_t>(n), false);
        for (int v : cyc) on_cycle[static_cast<size_t>(v)] = true;
        bool all_off_leaves = true;
        for (int v = 0; v < n; ++v)
            if (!on_cycle[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] != 1)
                all_off_leaves = false;
        cls.crab = all_off_leaves;
    }
    return cls;
}

namespace {

int covered_vertices(const Graph& g, EdgeSubset s) {
    std::uint64_t mask = 0;
    for (int i = 0; i < g.edge_count(); ++i)
        if (s >> i & 1) {
            mask |= std::uint64_t{1} << g.edge(i).first;
            mask |= std::uint64_t{1} << g.edge(i).second;
        }
    return std::popcount(mask);
}

}  // namespace

std::vector<EdgeSubset> subtrees(const Graph& t) {
    if (!classify(t).tree) throw std::invalid_argument("subtrees expects a tree");
    std::vector<EdgeSubset> out;
    EdgeSubset full = t.full_edge_set();
    for (EdgeSubset s = 1; s <= full; ++s) {
        // any edge subset of a tree is a forest; it is connected exactly
        // when it covers one more vertex than it has edges
        if (covered_vertices(t, s) == std::popcount(s) + 1) out.push_back(s);
        if (s == full) break;
    }
    return out;
}

EdgeSubset leaf_edges(const Graph& t, EdgeSubset s) {
    std::array<int, 64> deg{};
    for (int i = 0; i < t.edge_count(); ++i)
        if (s >> i & 1) {
            deg[static_cast<size_t>(t.edge(i).first)]++;
            deg[static_cast<size_t>(t.edge(i).second)]++;
        }
    EdgeSubset out = 0;
    for (int i = 0; i < t.edge_count(); ++i)
        if (s >> i & 1) {
            auto [u, v] = t.edge(i);
            if (deg[static_cast<size_t>(u)] == 1 || deg[static_cast<size_t>(v)] == 1)
                out |= EdgeSubset{1} << i;
        }
    return out;
}

EdgeSubset connector(const Graph& t, EdgeSubset a) {
    if (!classify(t).tree) throw std::invalid_argument("connector expects a tree");
    if (a == 0) throw std::invalid_argument("connector expects a nonempty subset");
    if (a & ~t.full_edge_set()) throw std::invalid_argument("subset uses unknown edge bits");
    // an edge belongs to the Steiner tree of A's endpoints exactly when both
    // sides of its removal contain a marked vertex
    std::vector<bool> marked(static_cast<size_t>(t.order()), false);
    int total = 0;
    for (int i = 0; i < t.edge_count(); ++i)
        if (a >> i & 1) {
            for (int v : {t.edge(i).first, t.edge(i).second})
                if (!marked[static_cast<size_t>(v)]) {
                    marked[static_cast<size_t>(v)] = true;
                    ++total;
                }
        }
    auto adj = t.adjacency();
    // root at vertex 0, count marked vertices below each edge
    std::vector<int> order, parent(static_cast<size_t>(t.order()), -1);
    order.reserve(static_cast<size_t>(t.order()));
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int w : adj[static_cast<size_t>(u)])
            if (w != parent[static_cast<size_t>(u)]) {
                parent[static_cast<size_t>(w)] = u;
                order.push_back(w);
            }
    }
    std::vector<int> below(static_cast<size_t>(t.order()), 0);
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        if (marked[static_cast<size_t>(v)]) below[static_cast<size_t>(v)]++;
        if (parent[static_cast<size_t>(v)] != -1)
            below[static_cast<size_t>(parent[static_cast<size_t>(v)])] +=
                below[static_cast<size_t>(v)];
    }
    EdgeSubset steiner = 0;
    for (int i = 0; i < t.edge_count(); ++i) {
        auto [u, v] = t.edge(i);
        int child = parent[static_cast<size_t>(v)] == u ? v : u;
        int cnt = below[static_cast<size_t>(child)];
        if (cnt > 0 && cnt < total) steiner |= EdgeSubset{1} << i;
    }
    return steiner & ~a;
}

namespace {

// Canonical AHU string of the tree rooted at `root`.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int from) {
    std::vector<std::string> child_codes;
    for (int w : adj[static_cast<size_t>(root)])
        if (w != from) child_codes.push_back(rooted_code(adj, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const std::string& c : child_codes) code += c;
    code += ')';
    return code;
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.order();
    if (n == 1) return {0};
    auto adj = t.adjacency();
    std::vector<int> deg = t.degrees();
    std::vector<int> layer;
    std::vector<bool> removed(static_cast<size_t>(n), false);
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) layer.push_back(v);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<size_t>(v)] = true;
            --remaining;
            for (int w : adj[static_cast<size_t>(v)])
                if (!removed[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1)
                    next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[static_cast<size_t>(v)]) centers.push_back(v);
    return centers;
}

}  // namespace

std::string canonical_tree_code(const Graph& t) {
    if (!classify(t).tree) throw std::invalid_argument("canonical_tree_code expects a tree");
    auto adj = t.adjacency();
    std::string best;
    for (int c : tree_centers(t)) {
        std::string code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::string canonical_graph_code(const Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_graph_code is capped at n <= 8");
    std::vector<std::vector<bool>> adj(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        adj[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        code.reserve(static_cast<size_t>(n * (n - 1) / 2));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code += adj[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                           [static_cast<size_t>(perm[static_cast<size_t>(j)])]
                            ? '1'
                            : '0';
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    std::optional<int> declared_n;
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    auto fail = [&](size_t col, const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(line_no) + ", col " +
                                    std::to_string(col + 1) + ": " + msg);
    };
    while (std::getline(stream, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (declared_n || !edges.empty())
                fail(line.find('n'), "header must be the first content line");
            int value = 0;
            if (!(ls >> value) || value < 1) fail(line.size(), "expected a positive vertex count");
            std::string extra;
            if (ls >> extra) fail(line.find(extra), "unexpected token '" + extra + "'");
            declared_n = value;
            continue;
        }
        size_t used = 0;
        int u = 0, v = 0;
        try {
            u = std::stoi(first, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != first.size() || u < 0) fail(line.find(first), "expected a vertex index");
        std::string second;
        if (!(ls >> second)) fail(line.size(), "expected two vertex indices");
        try {
            v = std::stoi(second, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != second.size() || v < 0) fail(line.find(second), "expected a vertex index");
        std::string extra;
        if (ls >> extra) fail(line.find(extra), "unexpected token '" + extra + "'");
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    int n = declared_n.value_or(max_vertex + 1);
    if (n < 1) throw std::invalid_argument("empty graph file: no header and no edges");
    if (max_vertex >= n)
        throw std::invalid_argument("vertex index " + std::to_string(max_vertex) +
                                    " exceeds declared order " + std::to_string(n));
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace csf
