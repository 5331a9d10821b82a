#include "csf/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace csf {

std::string SpiderSpec::to_string() const { return "spider" + legs.to_string(); }

int CaterpillarSpec::order() const {
    int total = static_cast<int>(leaf_numbers.size());
    for (int f : leaf_numbers) total += f;
    return total;
}

std::string CaterpillarSpec::to_string() const {
    std::string out = "caterpillar(";
    for (size_t i = 0; i < leaf_numbers.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(leaf_numbers[i]);
    }
    return out + ")";
}

std::string SquidSpec::to_string() const {
    return "squid(g=" + std::to_string(cycle_length) + ";" + tentacles.to_string() + ")";
}

int CrabSpec::order() const {
    int total = cycle_length;
    for (int f : leaf_counts) total += f;
    return total;
}

std::string CrabSpec::to_string() const {
    std::string out = "crab(g=" + std::to_string(cycle_length) + ";(";
    for (size_t i = 0; i < leaf_counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(leaf_counts[i]);
    }
    return out + "))";
}

CaterpillarSpec normalize_caterpillar(std::vector<int> leaf_numbers) {
    if (leaf_numbers.size() < 2)
        throw std::invalid_argument("caterpillar needs a spine of >= 2 vertices");
    for (int f : leaf_numbers)
        if (f < 0) throw std::invalid_argument("leaf numbers must be >= 0");
    if (leaf_numbers.front() < 1 || leaf_numbers.back() < 1)
        throw std::invalid_argument("end spine vertices need at least one leaf");
    std::vector<int> rev(leaf_numbers.rbegin(), leaf_numbers.rend());
    if (rev < leaf_numbers) leaf_numbers = std::move(rev);
    return CaterpillarSpec{std::move(leaf_numbers)};
}

CrabSpec normalize_crab(int cycle_length, std::vector<int> leaf_counts) {
    if (cycle_length < 3) throw std::invalid_argument("crab cycle length must be >= 3");
    if (static_cast<int>(leaf_counts.size()) != cycle_length)
        throw std::invalid_argument("crab needs one leaf count per cycle vertex");
    for (int f : leaf_counts)
        if (f < 0) throw std::invalid_argument("leaf counts must be >= 0");
    std::vector<int> best = leaf_counts;
    std::vector<int> current = leaf_counts;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (int r = 0; r < cycle_length; ++r) {
            std::rotate(current.begin(), current.begin() + 1, current.end());
            if (current < best) best = current;
        }
        std::reverse(current.begin(), current.end());
    }
    return CrabSpec{cycle_length, std::move(best)};
}

Graph build_spider(const SpiderSpec& spec) {
    if (spec.legs.length() < 3) throw std::invalid_argument("spider needs >= 3 legs");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int i = 0; i < spec.legs.length(); ++i) {
        int prev = 0;
        for (int step = 0; step < spec.legs.part(i); ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, std::move(edges));
}

Graph build_caterpillar(const CaterpillarSpec& spec) {
    normalize_caterpillar(spec.leaf_numbers);  // validation only
    int s = static_cast<int>(spec.leaf_numbers.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
    int next = s;
    for (int i = 0; i < s; ++i)
        for (int f = 0; f < spec.leaf_numbers[static_cast<size_t>(i)]; ++f)
            edges.emplace_back(i, next++);
    return Graph(next, std::move(edges));
}

Graph build_squid(const SquidSpec& spec) {
    if (spec.cycle_length < 3) throw std::invalid_argument("squid cycle length must be >= 3");
    if (spec.tentacles.length() < 1) throw std::invalid_argument("squid needs >= 1 tentacle");
    std::vector<std::pair<int, int>> edges;
    int g = spec.cycle_length;
    for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
    int next = g;
    for (int i = 0; i < spec.tentacles.length(); ++i) {
        int prev = 0;
        for (int step = 0; step < spec.tentacles.part(i); ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, std::move(edges));
}

Graph build_crab(const CrabSpec& spec) {
    if (spec.cycle_length < 3) throw std::invalid_argument("crab cycle length must be >= 3");
    if (static_cast<int>(spec.leaf_counts.size()) != spec.cycle_length)
        throw std::invalid_argument("crab needs one leaf count per cycle vertex");
    std::vector<std::pair<int, int>> edges;
    int g = spec.cycle_length;
    for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
    int next = g;
    for (int i = 0; i < g; ++i)
        for (int f = 0; f < spec.leaf_counts[static_cast<size_t>(i)]; ++f)
            edges.emplace_back(i, next++);
    return Graph(next, std::move(edges));
}

SpiderSpec spider_spec_of(const Graph& g) {
    if (!classify(g).spider) throw std::invalid_argument("not a spider");
    std::vector<int> deg = g.degrees();
    int torso = -1;
    for (int v = 0; v < g.order(); ++v)
        if (deg[static_cast<size_t>(v)] >= 3) torso = v;
    auto adj = g.adjacency();
    std::vector<int> legs;
    for (int start : adj[static_cast<size_t>(torso)]) {
        int len = 1, prev = torso, cur = start;
        while (deg[static_cast<size_t>(cur)] == 2) {
            for (int w : adj[static_cast<size_t>(cur)])
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            ++len;
        }
        legs.push_back(len);
    }
    return SpiderSpec{Partition(std::move(legs))};
}

CaterpillarSpec caterpillar_spec_of(const Graph& g) {
    if (!classify(g).caterpillar) throw std::invalid_argument("not a caterpillar");
    std::vector<int> deg = g.degrees();
    auto adj = g.adjacency();
    std::vector<bool> on_spine(static_cast<size_t>(g.order()), false);
    for (int v = 0; v < g.order(); ++v)
        if (deg[static_cast<size_t>(v)] >= 2) on_spine[static_cast<size_t>(v)] = true;
    // walk the spine from one end
    int start = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (!on_spine[static_cast<size_t>(v)]) continue;
        int spine_deg = 0;
        for (int w : adj[static_cast<size_t>(v)])
            if (on_spine[static_cast<size_t>(w)]) ++spine_deg;
        if (spine_deg == 1) {
            start = v;
            break;
        }
    }
    std::vector<int> leaf_numbers;
    int prev = -1, cur = start;
    while (cur != -1) {
        int leaves = 0, next = -1;
        for (int w : adj[static_cast<size_t>(cur)]) {
            if (!on_spine[static_cast<size_t>(w)])
                ++leaves;
            else if (w != prev)
                next = w;
        }
        leaf_numbers.push_back(leaves);
        prev = cur;
        cur = next;
    }
    return normalize_caterpillar(std::move(leaf_numbers));
}

SquidSpec squid_spec_of(const Graph& g) {
    if (!classify(g).squid) throw std::invalid_argument("not a squid");
    std::vector<int> cyc = cycle_vertices(g);
    std::vector<int> deg = g.degrees();
    int head = -1;
    for (int v : cyc)
        if (deg[static_cast<size_t>(v)] > 2) head = v;
    std::vector<bool> on_cycle(static_cast<size_t>(g.order()), false);
    for (int v : cyc) on_cycle[static_cast<size_t>(v)] = true;
    auto adj = g.adjacency();
    std::vector<int> tentacles;
    for (int start : adj[static_cast<size_t>(head)]) {
        if (on_cycle[static_cast<size_t>(start)]) continue;
        int len = 1, prev = head, cur = start;
        while (deg[static_cast<size_t>(cur)] == 2) {
            for (int w : adj[static_cast<size_t>(cur)])
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            ++len;
        }
        tentacles.push_back(len);
    }
    return SquidSpec{static_cast<int>(cyc.size()), Partition(std::move(tentacles))};
}

CrabSpec crab_spec_of(const Graph& g) {
    if (!classify(g).crab) throw std::invalid_argument("not a crab");
    std::vector<int> cyc = cycle_vertices(g);
    std::vector<bool> on_cycle(static_cast<size_t>(g.order()), false);
    for (int v : cyc) on_cycle[static_cast<size_t>(v)] = true;
    auto adj = g.adjacency();
    // walk the cycle in adjacency order
    int g_len = static_cast<int>(cyc.size());
    std::vector<int> ordered;
    ordered.push_back(cyc.front());
    int prev = -1;
    while (static_cast<int>(ordered.size()) < g_len) {
        int cur = ordered.back(), next = -1;
        for (int w : adj[static_cast<size_t>(cur)])
            if (on_cycle[static_cast<size_t>(w)] && w != prev &&
                (ordered.size() == 1 || w != ordered.front())) {
                next = w;
                break;
            }
        prev = cur;
        ordered.push_back(next);
    }
    std::vector<int> leaf_counts;
    for (int v : ordered) {
        int leaves = 0;
        for (int w : adj[static_cast<size_t>(v)])
            if (!on_cycle[static_cast<size_t>(w)]) ++leaves;
        leaf_counts.push_back(leaves);
    }
    return normalize_crab(g_len, std::move(leaf_counts));
}

std::vector<SpiderSpec> enumerate_spiders(int n) {
    std::vector<SpiderSpec> out;
    if (n < 4) return out;
    for (const Partition& legs : partitions_of(n - 1))
        if (legs.length() >= 3) out.push_back(SpiderSpec{legs});
    return out;
}

namespace {

void emit_compositions(int remaining, int slots, std::vector<int>& current,
                       const std::function<void(const std::vector<int>&)>& sink) {
    if (slots == 1) {
        if (remaining >= 1) {  // last spine vertex needs a leaf
            current.push_back(remaining);
            sink(current);
            current.pop_back();
        }
        return;
    }
    int low = current.empty() ? 1 : 0;  // first spine vertex needs a leaf
    for (int f = low; f <= remaining - 1; ++f) {
        current.push_back(f);
        emit_compositions(remaining - f, slots - 1, current, sink);
        current.pop_back();
    }
}

}  // namespace

std::vector<CaterpillarSpec> enumerate_caterpillars(int n) {
    std::vector<CaterpillarSpec> out;
    std::set<std::vector<int>> seen;
    for (int s = 2; s <= n - 2; ++s) {
        int leaf_total = n - s;
        std::vector<int> current;
        emit_compositions(leaf_total, s, current,
                          [&](const std::vector<int>& f) {
                              CaterpillarSpec spec = normalize_caterpillar(f);
                              if (seen.insert(spec.leaf_numbers).second) out.push_back(spec);
                          });
    }
    return out;
}

std::vector<SquidSpec> enumerate_squids(int n) {
    std::vector<SquidSpec> out;
    for (int g = 3; g <= n - 1; ++g)
        for (const Partition& mu : partitions_of(n - g))
            if (mu.length() >= 1) out.push_back(SquidSpec{g, mu});
    return out;
}

std::vector<CrabSpec> enumerate_crabs(int n) {
    std::vector<CrabSpec> out;
    std::set<std::vector<int>> seen;
    for (int g = 3; g <= n; ++g) {
        int leaf_total = n - g;
        // all distributions of leaf_total over g cycle vertices, up to necklace
        std::vector<int> f(static_cast<size_t>(g), 0);
        std::function<void(int, int)> rec = [&](int idx, int remaining) {
            if (idx == g - 1) {
                f[static_cast<size_t>(idx)] = remaining;
                CrabSpec spec = normalize_crab(g, f);
                std::vector<int> key = spec.leaf_counts;
                key.insert(key.begin(), g);
                if (seen.insert(key).second) out.push_back(spec);
                return;
            }
            for (int take = 0; take <= remaining; ++take) {
                f[static_cast<size_t>(idx)] = take;
                rec(idx + 1, remaining - take);
            }
        };
        rec(0, leaf_total);
    }
    return out;
}

}  // namespace csf
