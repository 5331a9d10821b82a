#include "csf/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "csf/combinatorics.hpp"

namespace csf {

namespace {

// Reusable component-size scratch: recomputes per subset, the correctness
// baseline for every other expansion in this module.
struct SubsetTyper {
    explicit SubsetTyper(const Graph& g)
        : graph(g), parent(static_cast<size_t>(g.order())), size(static_cast<size_t>(g.order())) {}

    Partition type(EdgeSubset a) {
        int n = graph.order();
        std::iota(parent.begin(), parent.end(), 0);
        std::fill(size.begin(), size.end(), 1);
        for (int i = 0; i < graph.edge_count(); ++i)
            if (a >> i & 1) unite(graph.edge(i).first, graph.edge(i).second);
        std::vector<int> sizes;
        for (int v = 0; v < n; ++v)
            if (find(v) == v) sizes.push_back(size[static_cast<size_t>(v)]);
        return Partition(std::move(sizes));
    }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
    }

    const Graph& graph;
    std::vector<int> parent, size;
};

}  // namespace

SymFunc csf(const Graph& g) {
    SymFunc x(Basis::P, g.order());
    SubsetTyper typer(g);
    EdgeSubset full = g.full_edge_set();
    EdgeSubset a = 0;
    while (true) {
        BigRational sign(std::popcount(a) % 2 == 0 ? 1 : -1);
        x.add_coeff(typer.type(a), sign);
        if (a == full) break;
        ++a;
    }
    return x;
}

SymFunc csf_unicyclic_broken_circuit(const Graph& g, int e0) {
    if (!is_connected(g) || g.edge_count() != g.order())
        throw std::invalid_argument("broken-circuit expansion expects a connected unicyclic graph");
    if (e0 < 0 || e0 >= g.edge_count()) throw std::invalid_argument("edge index out of range");
    std::vector<int> cyc = cycle_vertices(g);
    std::vector<bool> on_cycle(static_cast<size_t>(g.order()), false);
    for (int v : cyc) on_cycle[static_cast<size_t>(v)] = true;
    EdgeSubset cycle_edges = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edge(i);
        if (on_cycle[static_cast<size_t>(u)] && on_cycle[static_cast<size_t>(v)])
            cycle_edges |= EdgeSubset{1} << i;
    }
    if (!(cycle_edges >> e0 & 1))
        throw std::invalid_argument("edge does not lie on the unique cycle");
    EdgeSubset broken = cycle_edges & ~(EdgeSubset{1} << e0);

    SymFunc x(Basis::P, g.order());
    SubsetTyper typer(g);
    EdgeSubset full = g.full_edge_set();
    EdgeSubset a = 0;
    while (true) {
        if ((a & broken) != broken) {
            BigRational sign(std::popcount(a) % 2 == 0 ? 1 : -1);
            x.add_coeff(typer.type(a), sign);
        }
        if (a == full) break;
        ++a;
    }
    return x;
}

BivariatePolynomial subtree_polynomial_direct(const Graph& t) {
    if (!classify(t).tree) throw std::invalid_argument("subtree polynomial expects a tree");
    BivariatePolynomial s;
    for (EdgeSubset sub : subtrees(t))
        s.add_term(std::popcount(sub), std::popcount(leaf_edges(t, sub)), 1);
    return s;
}

BivariatePolynomial connector_polynomial_direct(const Graph& t) {
    if (!classify(t).tree) throw std::invalid_argument("connector polynomial expects a tree");
    int n = t.order(), m = t.edge_count();
    BivariatePolynomial k;
    if (m == 0) return k;

    // root once; per subset, |K(A)| = (edges with marked vertices on both
    // sides) - |A|
    auto adj = t.adjacency();
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        for (int w : adj[static_cast<size_t>(u)])
            if (w != parent[static_cast<size_t>(u)]) {
                parent[static_cast<size_t>(w)] = u;
                order.push_back(w);
            }
    }
    std::vector<int> below(static_cast<size_t>(n));
    std::vector<int> edge_child(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = t.edge(i);
        edge_child[static_cast<size_t>(i)] = parent[static_cast<size_t>(v)] == u ? v : u;
    }
    for (EdgeSubset a = 1; a <= t.full_edge_set(); ++a) {
        std::fill(below.begin(), below.end(), 0);
        int total = 0;
        for (int i = 0; i < m; ++i)
            if (a >> i & 1) {
                for (int v : {t.edge(i).first, t.edge(i).second})
                    if (below[static_cast<size_t>(v)] == 0) {
                        below[static_cast<size_t>(v)] = 1;
                        ++total;
                    }
            }
        for (size_t i = order.size(); i-- > 1;) {
            int v = order[i];
            below[static_cast<size_t>(parent[static_cast<size_t>(v)])] +=
                below[static_cast<size_t>(v)];
        }
        int steiner = 0;
        for (int i = 0; i < m; ++i) {
            int cnt = below[static_cast<size_t>(edge_child[static_cast<size_t>(i)])];
            if (cnt > 0 && cnt < total) ++steiner;
        }
        k.add_term(std::popcount(a), steiner - std::popcount(a), 1);
        if (a == t.full_edge_set()) break;
    }
    return k;
}

BivariatePolynomial connector_from_csf(const SymFunc& x, int n) {
    if (x.basis() != Basis::P) throw std::invalid_argument("expected the P basis");
    if (x.degree() != n) throw std::invalid_argument("degree does not match n");
    BivariatePolynomial k;
    for (int a = 1; a <= n - 1; ++a) {
        for (int b = 0; a + b <= n - 1; ++b) {
            BigRational total = 0;
            for (const auto& [lambda, c] : x.coeffs()) {
                BigInt v = psi(lambda, n, a, b);
                if (v != 0) total += BigRational(v) * c;
            }
            if (total != 0) k.set_term(a, b, to_integer(total));
        }
    }
    return k;
}

BivariatePolynomial subtree_from_csf(const SymFunc& x, int n) {
    if (x.basis() != Basis::P) throw std::invalid_argument("expected the P basis");
    if (x.degree() != n) throw std::invalid_argument("degree does not match n");
    BivariatePolynomial s;
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= i; ++j) {
            BigRational total = 0;
            for (const auto& [lambda, c] : x.coeffs()) {
                BigInt v = phi(lambda, n, i, j);
                if (v != 0) total += BigRational(v) * c;
            }
            if (total != 0) s.set_term(i, j, to_integer(total));
        }
    }
    return s;
}

bool substitution_identity_check(const BivariatePolynomial& s, const BivariatePolynomial& k) {
    // expand K(qr, q(1-r)) exactly: x^a y^b -> q^{a+b} r^a (1-r)^b
    BivariatePolynomial expanded;
    for (const auto& [exps, c] : k.terms()) {
        int a = exps.first, b = exps.second;
        for (int h = 0; h <= b; ++h) {
            BigInt coef = c * binomial(b, h);
            expanded.add_term(a + b, a + h, h % 2 == 0 ? coef : -coef);
        }
    }
    if (!(expanded == s)) return false;
    // inverse direction at rational sample points with x+y != 0
    const std::pair<int, int> samples[] = {{1, 1}, {2, 1}, {1, 3}, {5, 2}, {3, 4}};
    for (auto [xi, yi] : samples) {
        BigRational xv(xi), yv(yi);
        BigRational lhs = k.evaluate(xv, yv);
        BigRational rhs = s.evaluate(xv + yv, xv / (xv + yv));
        if (lhs != rhs) return false;
    }
    return true;
}

long long SequenceTriple::pi(int i) const {
    return (i >= 1 && i <= static_cast<int>(path_seq.size())) ? path_seq[static_cast<size_t>(i - 1)]
                                                              : 0;
}
long long SequenceTriple::sigma(int k) const {
    return (k >= 1 && k <= static_cast<int>(star_seq.size())) ? star_seq[static_cast<size_t>(k - 1)]
                                                              : 0;
}
long long SequenceTriple::delta(int j) const {
    return (j >= 1 && j <= static_cast<int>(degree_seq.size()))
               ? degree_seq[static_cast<size_t>(j - 1)]
               : 0;
}
int SequenceTriple::diameter() const {
    for (int i = static_cast<int>(path_seq.size()); i >= 1; --i)
        if (path_seq[static_cast<size_t>(i - 1)] > 0) return i;
    return 0;
}

SequenceTriple sequences_from_stp(const BivariatePolynomial& s, int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    SequenceTriple seq;
    seq.path_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    seq.star_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    seq.degree_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    if (n == 1) return seq;
    auto as_count = [](const BigInt& v) {
        if (v < 0) throw std::domain_error("negative count in subtree polynomial");
        return static_cast<long long>(v);
    };
    seq.path_seq[0] = n - 1;
    for (int i = 2; i <= n - 1; ++i) seq.path_seq[static_cast<size_t>(i - 1)] = as_count(s.coeff(i, 2));
    for (int k = 1; k <= n - 1; ++k) seq.star_seq[static_cast<size_t>(k - 1)] = as_count(s.coeff(k, k));
    long long assigned = 0;
    for (int j = 2; j <= n - 1; ++j) {
        BigInt dj = 0;
        for (int k = j; k <= n - 1; ++k) {
            BigInt term = binomial(k, j) * seq.star_seq[static_cast<size_t>(k - 1)];
            dj += ((j + k) % 2 == 0) ? term : -term;
        }
        if (dj < 0) throw std::domain_error("negative derived degree count: not a tree's S");
        seq.degree_seq[static_cast<size_t>(j - 1)] = static_cast<long long>(dj);
        assigned += static_cast<long long>(dj);
    }
    if (assigned > n) throw std::domain_error("degree counts exceed order: not a tree's S");
    seq.degree_seq[0] = n - assigned;
    return seq;
}

SequenceTriple sequences_direct(const Graph& t) {
    if (!classify(t).tree) throw std::invalid_argument("sequences_direct expects a tree");
    int n = t.order();
    SequenceTriple seq;
    seq.path_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    seq.star_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    seq.degree_seq.assign(static_cast<size_t>(std::max(0, n - 1)), 0);
    if (n == 1) return seq;
    std::vector<int> deg = t.degrees();
    for (int v = 0; v < n; ++v) seq.degree_seq[static_cast<size_t>(deg[static_cast<size_t>(v)] - 1)]++;
    // sigma_k = sum_j C(j,k) delta_j for k >= 2; every edge is a 1-star
    seq.star_seq[0] = n - 1;
    for (int k = 2; k <= n - 1; ++k) {
        BigInt total = 0;
        for (int j = k; j <= n - 1; ++j)
            total += binomial(j, k) * seq.degree_seq[static_cast<size_t>(j - 1)];
        seq.star_seq[static_cast<size_t>(k - 1)] = static_cast<long long>(total);
    }
    // count i-edge paths by BFS between all vertex pairs
    auto adj = t.adjacency();
    for (int u = 0; u < n; ++u) {
        std::vector<int> dist(static_cast<size_t>(n), -1);
        std::vector<int> stack{u};
        dist[static_cast<size_t>(u)] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<size_t>(v)])
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    stack.push_back(w);
                }
        }
        for (int v = u + 1; v < n; ++v) seq.path_seq[static_cast<size_t>(dist[static_cast<size_t>(v)] - 1)]++;
    }
    return seq;
}

ScalarExtractions scalar_extractions(const SymFunc& x) {
    ScalarExtractions out;
    out.n = x.degree();
    int n = out.n;
    if (n >= 2) {
        std::vector<int> parts{2};
        for (int i = 0; i < n - 2; ++i) parts.push_back(1);
        out.edges = -to_integer(x.coeff(Partition(parts)));
    } else {
        out.edges = 0;
    }
    int min_len = n;
    for (const auto& [p, c] : x.coeffs()) min_len = std::min(min_len, p.length());
    out.components = min_len;
    if (out.components == 1 && out.edges == n - 1) {
        std::vector<BigInt> counts;  // j = 2..n
        for (int j = 2; j <= n; ++j) {
            std::vector<int> parts{j};
            for (int i = 0; i < n - j; ++i) parts.push_back(1);
            BigInt c = to_integer(x.coeff(Partition(parts)));
            counts.push_back(c < 0 ? -c : c);
        }
        out.subtree_counts = counts;
        if (n >= 3) {
            BigInt c = to_integer(x.coeff(
                Partition(std::vector<int>{n - 1, 1})));
            out.leaves = c < 0 ? -c : c;
        }
    }
    return out;
}

std::optional<int> girth_from_csf(const SymFunc& x) {
    int n = x.degree();
    ScalarExtractions basics = scalar_extractions(x);
    const BigInt& m = basics.edges;
    long long m_ll = static_cast<long long>(m);
    std::vector<BigRational> level_sums(static_cast<size_t>(n) + 1, BigRational(0));
    for (const auto& [p, c] : x.coeffs()) level_sums[static_cast<size_t>(p.length())] += c;
    for (int k = n - 1; k >= 1; --k) {
        BigInt expected = binomial(m_ll, n - k);
        if ((n - k) % 2 != 0) expected = -expected;
        if (level_sums[static_cast<size_t>(k)] != BigRational(expected)) return n - k + 1;
    }
    return std::nullopt;
}

}  // namespace csf
