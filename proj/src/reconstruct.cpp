#include "csf/reconstruct.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "csf/combinatorics.hpp"
#include "csf/invariants.hpp"

namespace csf {

std::vector<BigInt> d_vector(const SymFunc& two_part, int n) {
    int m = n / 2;
    std::vector<BigInt> d;
    d.reserve(static_cast<size_t>(m));
    for (int a = 1; a <= m; ++a) {
        BigInt c = to_integer(two_part.coeff(Partition(std::vector<int>{n - a, a})));
        d.push_back(c < 0 ? -c : c);
    }
    return d;
}

bool is_caterpillar_by_csf(const SymFunc& x) {
    int n = x.degree();
    if (n < 4) throw std::invalid_argument("caterpillar criterion needs n >= 4");
    SequenceTriple seq = sequences_from_stp(subtree_from_csf(x, n), n);
    long long leaves = seq.delta(1);
    if (leaves == n - 1) return false;  // stars satisfy the raw criterion but have no spine
    return seq.diameter() - 1 == n - leaves;
}

namespace {

long long small(const BigInt& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<long long>::max())
        throw std::domain_error(std::string("count out of range for ") + what);
    return static_cast<long long>(v);
}

// Ways to remove `k - j` further end-of-leg edges after deleting one whole
// leg of length j, leaving every other leg nonempty. Capacities follow the
// leg multiset directly.
BigInt omega_term_direct(const std::vector<long long>& m, int j, int k, int legs) {
    int t = k - j;
    std::vector<int> caps;
    long long total_short = 0;
    for (int i = 1; i <= t; ++i) {
        long long count = (i < static_cast<int>(m.size())) ? m[static_cast<size_t>(i)] : 0;
        total_short += count;
        if (i == j) --count;
        if (count < 0) throw std::domain_error("inconsistent leg multiplicities");
        for (long long c = 0; c < count; ++c) caps.push_back(i - 1);
    }
    long long longer = legs - total_short - (j > t ? 1 : 0);
    if (longer < 0) throw std::domain_error("inconsistent leg multiplicities");
    for (long long c = 0; c < longer; ++c) caps.push_back(t);
    return omega(caps, t);
}

// The same count read straight off the printed argument lists: the box
// multiplicities are (m_2,...,m_{k-j}, long-leg count), with the removed leg
// decremented in place for j <= floor(k/2) and folded into the final entry
// otherwise. Omega's ball count equals its arity.
BigInt omega_term_literal(const std::vector<long long>& m, int j, int k, int legs) {
    int t = k - j;
    auto mult = [&](int i) -> long long {
        return (i >= 1 && i < static_cast<int>(m.size())) ? m[static_cast<size_t>(i)] : 0;
    };
    long long prefix = 0;
    for (int i = 1; i <= t; ++i) prefix += mult(i);
    std::vector<long long> args;
    for (int c = 1; c <= t - 1; ++c) {
        long long a = mult(c + 1);
        if (j >= 2 && j <= k / 2 && c == j - 1) --a;
        args.push_back(a);
    }
    if (j <= k / 2)
        args.push_back(legs - prefix);
    else
        args.push_back(legs - 1 - prefix);
    std::vector<int> caps;
    for (int c = 1; c <= static_cast<int>(args.size()); ++c) {
        long long count = args[static_cast<size_t>(c - 1)];
        if (count < 0) throw std::domain_error("inconsistent leg multiplicities");
        for (long long i = 0; i < count; ++i) caps.push_back(c);
    }
    return omega(caps, static_cast<int>(args.size()));
}

}  // namespace

SpiderSpec spider_from_stp(const BivariatePolynomial& s, int n, OmegaRoute route) {
    SequenceTriple seq = sequences_from_stp(s, n);
    long long legs = seq.delta(1);
    if (legs < 3) throw std::domain_error("subtree polynomial has fewer than 3 leaves");
    if (legs == 3) {
        long long diam = seq.diameter();
        long long edges = n - 1;
        long long leg3 = edges - diam;
        if (leg3 < 1) throw std::domain_error("not a 3-leg spider's subtree polynomial");
        BigInt three_leaf = 0;
        for (const auto& [exps, c] : s.terms())
            if (exps.second == 3) three_leaf += c;
        if (three_leaf % leg3 != 0) throw std::domain_error("three-leaf count not divisible");
        long long prod = small(three_leaf / leg3, "leg product");
        // legs 1 and 2 solve t^2 - diam t + prod = 0 in integers
        long long disc = diam * diam - 4 * prod;
        if (disc < 0) throw std::domain_error("no integer leg solution");
        long long root = 0;
        while (root * root < disc) ++root;
        if (root * root != disc || (diam + root) % 2 != 0)
            throw std::domain_error("no integer leg solution");
        long long leg1 = (diam + root) / 2, leg2 = (diam - root) / 2;
        if (leg2 < 1 || leg2 < leg3)
            throw std::domain_error("legs out of order: not a spider's subtree polynomial");
        return SpiderSpec{Partition(std::vector<int>{static_cast<int>(leg1),
                                                     static_cast<int>(leg2),
                                                     static_cast<int>(leg3)})};
    }

    // recover part multiplicities iteratively: s(n-k-1, legs-1) counts the
    // ways to delete k end edges killing exactly one leg
    std::vector<long long> m(2, 0);  // m[1], m[2], ... as discovered
    m[1] = small(s.coeff(n - 2, static_cast<int>(legs) - 1), "m_1");
    long long count_sum = m[1], edge_sum = m[1];
    int k = 1;
    while (count_sum < legs || edge_sum < n - 1) {
        ++k;
        if (k > n) throw std::domain_error("leg multiplicities do not close: not a spider");
        BigInt rhs = s.coeff(n - k - 1, static_cast<int>(legs) - 1);
        for (int j = 1; j < k; ++j) {
            if (m[static_cast<size_t>(j)] == 0) continue;
            BigInt term = route == OmegaRoute::Direct
                              ? omega_term_direct(m, j, k, static_cast<int>(legs))
                              : omega_term_literal(m, j, k, static_cast<int>(legs));
            rhs -= m[static_cast<size_t>(j)] * term;
        }
        if (rhs < 0) throw std::domain_error("negative multiplicity: not a spider");
        long long mk = small(rhs, "m_k");
        m.push_back(mk);
        count_sum += mk;
        edge_sum += static_cast<long long>(k) * mk;
    }
    if (count_sum != legs || edge_sum != n - 1)
        throw std::domain_error("leg multiplicities inconsistent: not a spider");
    std::vector<int> parts;
    for (int len = static_cast<int>(m.size()) - 1; len >= 1; --len)
        for (long long c = 0; c < m[static_cast<size_t>(len)]; ++c) parts.push_back(len);
    return SpiderSpec{Partition(std::move(parts))};
}

SpiderSpec spider_from_two_part(const SymFunc& y, int n) {
    std::vector<BigInt> dv = d_vector(y, n);
    int m = static_cast<int>(dv.size());
    std::vector<int> d;
    d.reserve(dv.size());
    for (const BigInt& v : dv) d.push_back(static_cast<int>(small(v, "d entry")));

    std::vector<int> mu;
    bool decreasing = true;
    for (int i = 0; i + 1 < m; ++i)
        if (d[static_cast<size_t>(i)] < d[static_cast<size_t>(i + 1)]) decreasing = false;
    if (decreasing) {
        // zeros can only trail a weakly decreasing sequence
        for (int v : d)
            if (v > 0) mu.push_back(v);
    } else {
        int t = 0;
        while (t + 1 < m && d[static_cast<size_t>(t)] >= d[static_cast<size_t>(t + 1)]) ++t;
        // t is now the last index (0-based) of the weakly decreasing prefix
        if (d[static_cast<size_t>(t)] != 1)
            throw std::domain_error("d-vector matches neither spider shape");
        for (int i = 0; i <= t; ++i) mu.push_back(d[static_cast<size_t>(i)]);
        for (int i = t + 1; i < m; ++i) {
            int v = d[static_cast<size_t>(i)];
            if (v == 2) {
                mu.push_back(1);
                mu.push_back(1);
            } else if (v == 1 && i == m - 1) {
                mu.push_back(1);
            } else {
                throw std::domain_error("d-vector matches neither spider shape");
            }
        }
    }
    Partition mu_part(mu);
    if (mu_part.weight() != n - 1)
        throw std::domain_error("d-vector weight mismatch: not a spider's two-part portion");
    return SpiderSpec{mu_part.conjugate()};
}

namespace {

// Saturating multiset difference a - b over partition parts, descending.
std::vector<int> part_difference(const Partition& a, const Partition& b) {
    std::map<int, int> counts;
    for (int p : a.parts()) counts[p]++;
    for (int p : b.parts()) counts[p]--;
    std::vector<int> out;
    for (auto& [value, count] : counts)
        for (int i = 0; i < count; ++i) out.push_back(value);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

struct PairMultiset {
    std::vector<std::pair<int, int>> pairs;  // normalized (min,max), sorted

    void add(int a, int b, long long multiplicity) {
        for (long long i = 0; i < multiplicity; ++i) pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    void normalize() { std::sort(pairs.begin(), pairs.end()); }
};

std::vector<std::pair<int, int>> consecutive_pairs(const std::vector<int>& arr, bool cyclic) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < arr.size(); ++i)
        out.emplace_back(std::min(arr[i], arr[i + 1]), std::max(arr[i], arr[i + 1]));
    if (cyclic && arr.size() >= 2)
        out.emplace_back(std::min(arr.front(), arr.back()), std::max(arr.front(), arr.back()));
    std::sort(out.begin(), out.end());
    return out;
}

// Leaf-value multiset and adjacency pairs from the singleton-free
// coefficients; shared by the caterpillar and crab reconstructions.
struct SingletonFreeData {
    Partition max_type;
    std::vector<int> values;  // parts - 1
    PairMultiset pairs;
};

SingletonFreeData singleton_free_structure(const SymFunc& x, const char* what) {
    std::vector<const Partition*> singleton_free;
    int max_len = 0;
    for (const auto& [p, c] : x.coeffs()) {
        if (p.min_part() < 2) continue;
        singleton_free.push_back(&p);
        max_len = std::max(max_len, p.length());
    }
    if (max_len == 0) throw std::domain_error(std::string(what) + ": no singleton-free types");
    SingletonFreeData data;
    int hits = 0;
    for (const Partition* p : singleton_free)
        if (p->length() == max_len) {
            data.max_type = *p;
            ++hits;
        }
    if (hits != 1)
        throw std::domain_error(std::string(what) + ": ambiguous maximal singleton-free type");
    for (int p : data.max_type.parts()) data.values.push_back(p - 1);
    for (const Partition* p : singleton_free) {
        if (p->length() != max_len - 1) continue;
        std::vector<int> removed = part_difference(data.max_type, *p);
        std::vector<int> added = part_difference(*p, data.max_type);
        if (removed.size() != 2 || added.size() != 1 || removed[0] + removed[1] != added[0])
            throw std::domain_error(std::string(what) + ": adjacency type mismatch");
        BigInt c = to_integer(x.coeff(*p));
        data.pairs.add(removed[0] - 1, removed[1] - 1, small(c < 0 ? -c : c, "pair multiplicity"));
    }
    data.pairs.normalize();
    return data;
}

}  // namespace

CaterpillarSpec caterpillar_from_csf(const SymFunc& x, int n) {
    if (x.degree() != n) throw std::invalid_argument("degree does not match n");
    if (n < 4) throw std::invalid_argument("caterpillars need n >= 4");
    SingletonFreeData data = singleton_free_structure(x, "caterpillar");
    size_t spine = data.values.size();
    if (data.pairs.pairs.size() != spine - 1)
        throw std::domain_error("caterpillar: adjacency pair count does not match spine");
    std::vector<int> sorted_values = data.values;
    std::sort(sorted_values.begin(), sorted_values.end());
    std::set<std::vector<int>> solutions;
    std::vector<int> arr = sorted_values;
    do {
        if (consecutive_pairs(arr, false) == data.pairs.pairs) {
            std::vector<int> rev(arr.rbegin(), arr.rend());
            solutions.insert(std::min(arr, rev));
        }
    } while (std::next_permutation(arr.begin(), arr.end()));
    if (solutions.empty())
        throw std::domain_error("caterpillar: no spine ordering matches the adjacency pairs");
    if (solutions.size() > 1)
        throw std::domain_error("caterpillar: ambiguous adjacency structure");
    return normalize_caterpillar(*solutions.begin());
}

SquidSpec squid_from_csf(const SymFunc& x, int n) {
    if (x.degree() != n) throw std::invalid_argument("degree does not match n");
    std::optional<int> g = girth_from_csf(x);
    if (!g || *g < 3) throw std::domain_error("squid: no finite girth in X");
    int k = *g - 1;
    int sign = (n % 2 == 0) ? 1 : -1;  // (-1)^(n-2)

    SymFunc total = two_part_portion(x);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            int small_side = j - i, large_side = n - j + i;
            total.add_coeff(Partition(std::vector<int>{std::max(small_side, large_side),
                                                       std::min(small_side, large_side)}),
                            BigRational(sign));
        }
    auto add_prefix = [&](int upto, int factor) {
        for (int j = 1; j <= upto; ++j) {
            int a = std::max(j, n - j), b = std::min(j, n - j);
            total.add_coeff(Partition(std::vector<int>{a, b}), BigRational(sign * factor));
        }
    };
    for (int i = 1; i <= k; ++i) {
        add_prefix(k, 1);
        add_prefix(i, -1);
        add_prefix(k - i, -1);
    }
    SymFunc averaged = total.scaled(BigRational(1, k));
    for (const auto& [p, c] : averaged.coeffs())
        if (!is_integer(c)) throw std::domain_error("squid: averaged portion is not integral");

    SpiderSpec host = spider_from_two_part(averaged, n);
    Partition legs = host.legs;
    if (legs.remove_one(k)) {
        if (legs.length() == 0) throw std::domain_error("squid: no tentacles recovered");
        return SquidSpec{*g, legs};
    }
    if (legs.length() == 2) {
        // the host spider degenerated to a path; its split into legs is
        // ambiguous, but the total length is not
        int tentacle = legs.part(0) + legs.part(1) - k;
        if (tentacle >= 1)
            return SquidSpec{*g, Partition(std::vector<int>{tentacle})};
    }
    throw std::domain_error("squid: recovered spider has no leg of the cycle length");
}

CrabSpec crab_from_csf(const SymFunc& x, int n) {
    if (x.degree() != n) throw std::invalid_argument("degree does not match n");
    std::optional<int> g = girth_from_csf(x);
    if (!g || *g < 3) throw std::domain_error("crab: no finite girth in X");
    SingletonFreeData data = singleton_free_structure(x, "crab");
    if (static_cast<int>(data.values.size()) != *g)
        throw std::domain_error("crab: leaf-type length does not match the girth");
    if (data.pairs.pairs.size() != static_cast<size_t>(*g))
        throw std::domain_error("crab: adjacency pair count does not match the cycle");
    std::vector<int> sorted_values = data.values;
    std::sort(sorted_values.begin(), sorted_values.end());
    std::set<std::vector<int>> solutions;
    std::vector<int> arr = sorted_values;
    do {
        if (consecutive_pairs(arr, true) == data.pairs.pairs)
            solutions.insert(normalize_crab(*g, arr).leaf_counts);
    } while (std::next_permutation(arr.begin(), arr.end()));
    if (solutions.empty())
        throw std::domain_error("crab: no cyclic ordering matches the adjacency pairs");
    if (solutions.size() > 1) throw std::domain_error("crab: ambiguous adjacency structure");
    return CrabSpec{*g, *solutions.begin()};
}

}  // namespace csf
