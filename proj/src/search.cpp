#include "csf/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "csf/combinatorics.hpp"
#include "csf/enumerate.hpp"
#include "csf/invariants.hpp"
#include "csf/symfunc.hpp"

namespace csf {

int worker_count() {
    if (const char* env = std::getenv("CSF_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string ScanReport::to_text() const {
    std::string out = "scan family=" + family + " max_n=" + std::to_string(max_n);
    if (!invariant.empty()) out += " invariant=" + invariant;
    out += "\n";
    for (const auto& [order, count] : counts_per_order)
        out += "  n=" + std::to_string(order) + " classes=" + std::to_string(count) + "\n";
    for (const std::string& note : notes) out += "  note: " + note + "\n";
    for (const Finding& f : collisions)
        out += "  collision n=" + std::to_string(f.order) + " invariant=" + f.invariant +
               " a=" + f.code_a + " b=" + f.code_b +
               (f.detail.empty() ? "" : " detail=" + f.detail) + "\n";
    for (const Finding& f : failures)
        out += "  failure n=" + std::to_string(f.order) + " invariant=" + f.invariant +
               " a=" + f.code_a + (f.detail.empty() ? "" : " detail=" + f.detail) + "\n";
    out += "  collisions=" + std::to_string(collisions.size()) +
           " failures=" + std::to_string(failures.size()) + " elapsed_s=" +
           std::to_string(elapsed_seconds) + "\n";
    return out;
}

std::string ScanReport::to_records() const {
    std::string out;
    auto emit = [&](const Finding& f, const char* kind) {
        nlohmann::json rec;
        rec["kind"] = kind;
        rec["order"] = f.order;
        rec["code_a"] = f.code_a;
        rec["code_b"] = f.code_b;
        rec["invariant"] = f.invariant;
        rec["detail"] = f.detail;
        out += rec.dump() + "\n";
    };
    for (const Finding& f : collisions) emit(f, "collision");
    for (const Finding& f : failures) emit(f, "failure");
    return out;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void check_cap(int max_n, int cap, bool override_caps, const char* what) {
    if (max_n < 1) throw std::invalid_argument(std::string(what) + ": max_n must be >= 1");
    if (max_n > cap && !override_caps)
        throw std::invalid_argument(std::string(what) + ": max_n " + std::to_string(max_n) +
                                    " exceeds the desk-scale cap " + std::to_string(cap));
}

void sort_findings(std::vector<Finding>& v) {
    std::sort(v.begin(), v.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.order, a.code_a, a.code_b, a.detail) <
               std::tie(b.order, b.code_a, b.code_b, b.detail);
    });
}

// Buckets invariant serializations and reports non-isomorphic pairs that
// share one.
void bucket_collisions(int n, const std::vector<std::string>& codes,
                       const std::vector<std::string>& values, const std::string& invariant,
                       const std::function<std::string(size_t, size_t)>& detail,
                       std::vector<Finding>& out) {
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < values.size(); ++i) buckets[values[i]].push_back(i);
    for (const auto& [value, members] : buckets) {
        if (members.size() < 2) continue;
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b) {
                Finding f;
                f.order = n;
                f.code_a = std::min(codes[members[a]], codes[members[b]]);
                f.code_b = std::max(codes[members[a]], codes[members[b]]);
                f.invariant = invariant;
                f.detail = detail(members[a], members[b]);
                out.push_back(std::move(f));
            }
    }
}

}  // namespace

ScanReport distinguishability_scan(int max_n, TreeInvariant invariant, bool override_caps) {
    ScanReport report;
    report.family = "trees";
    report.max_n = max_n;
    report.invariant = invariant == TreeInvariant::Csf ? "csf" : "stp";
    check_cap(max_n, invariant == TreeInvariant::Csf ? kCsfScanCap : kStpScanCap, override_caps,
              "distinguishability_scan");
    Timer timer;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        report.counts_per_order.emplace_back(n, static_cast<long long>(trees.size()));
        std::vector<std::string> codes(trees.size()), values(trees.size()), xs(trees.size());
        parallel_for_index(trees.size(), [&](size_t i) {
            codes[i] = canonical_tree_code(trees[i]);
            SymFunc x = csf(trees[i]);
            xs[i] = x.to_string();
            values[i] = invariant == TreeInvariant::Csf
                            ? xs[i]
                            : subtree_polynomial_direct(trees[i]).to_string("q", "r");
        });
        bucket_collisions(n, codes, values, report.invariant,
                          [&](size_t a, size_t b) {
                              return xs[a] == xs[b] ? std::string("X equal")
                                                    : std::string("X differs");
                          },
                          report.collisions);
    }
    sort_findings(report.collisions);
    report.elapsed_seconds = timer.seconds();
    return report;
}

ScanReport graph_collision_scan(int max_n, bool override_caps) {
    ScanReport report;
    report.family = "connected-graphs";
    report.max_n = max_n;
    report.invariant = "csf";
    check_cap(max_n, kGraphScanCap, override_caps, "graph_collision_scan");
    Timer timer;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> graphs = enumerate_connected_graphs(n);
        report.counts_per_order.emplace_back(n, static_cast<long long>(graphs.size()));
        std::vector<std::string> codes(graphs.size()), values(graphs.size());
        parallel_for_index(graphs.size(), [&](size_t i) {
            codes[i] = canonical_graph_code(graphs[i]);
            values[i] = csf(graphs[i]).to_string();
        });
        bucket_collisions(n, codes, values, "csf",
                          [](size_t, size_t) { return std::string(); }, report.collisions);
    }
    sort_findings(report.collisions);
    report.elapsed_seconds = timer.seconds();
    return report;
}

namespace {

void require(bool ok, int n, const std::string& code, const std::string& invariant,
             const std::string& detail, std::vector<Finding>& failures, std::mutex& mu) {
    if (ok) return;
    std::lock_guard<std::mutex> lock(mu);
    failures.push_back(Finding{n, code, "", invariant, detail});
}

}  // namespace

ScanReport identity_sweep(int max_n, bool override_caps) {
    ScanReport report;
    report.family = "trees+unicyclic";
    report.max_n = max_n;
    report.invariant = "identities";
    check_cap(max_n, kIdentitySweepCap, override_caps, "identity_sweep");
    Timer timer;
    std::mutex mu;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        report.counts_per_order.emplace_back(n, static_cast<long long>(trees.size()));
        parallel_for_index(trees.size(), [&](size_t idx) {
            const Graph& t = trees[idx];
            std::string code = canonical_tree_code(t);
            SymFunc x = csf(t);
            BivariatePolynomial s_direct = subtree_polynomial_direct(t);
            BivariatePolynomial k_direct = connector_polynomial_direct(t);
            require(connector_from_csf(x, n) == k_direct, n, code, "main-thm",
                    "connector_from_csf mismatch", report.failures, mu);
            require(subtree_from_csf(x, n) == s_direct, n, code, "main-thm",
                    "subtree_from_csf mismatch", report.failures, mu);
            require(substitution_identity_check(s_direct, k_direct), n, code, "substitution",
                    "S(q,r) != K(qr,q(1-r))", report.failures, mu);
            // level-count identity: signed sums per length against C(n-1,k)
            std::map<int, BigRational> level;
            for (const auto& [p, c] : x.coeffs()) {
                BigRational term = c;
                if ((n - p.length()) % 2 != 0) term = -term;
                level[p.length()] += term;
            }
            bool level_ok = true;
            for (int k = 1; k <= n; ++k) {
                BigRational have = level.count(k) ? level[k] : BigRational(0);
                if (have != BigRational(binomial(n - 1, n - k))) level_ok = false;
            }
            require(level_ok, n, code, "given-size", "level-count identity failed",
                    report.failures, mu);
            // sequence extraction against the direct tally
            SequenceTriple from_stp = sequences_from_stp(s_direct, n);
            SequenceTriple direct = sequences_direct(t);
            require(from_stp.path_seq == direct.path_seq && from_stp.star_seq == direct.star_seq &&
                        from_stp.degree_seq == direct.degree_seq,
                    n, code, "sequences", "sequence extraction mismatch", report.failures, mu);
            // chromatic specialization
            bool chi_ok = true;
            for (int k = 0; k <= 5; ++k) {
                BigInt expected = 0;
                if (n == 1)
                    expected = k;
                else {
                    expected = k;
                    for (int i = 0; i < n - 1; ++i) expected *= (k - 1);
                }
                if (specialize_principal(x, k) != expected) chi_ok = false;
            }
            require(chi_ok, n, code, "chromatic", "specialization != k(k-1)^(n-1)",
                    report.failures, mu);
            require(!girth_from_csf(x).has_value(), n, code, "girth", "tree with finite girth",
                    report.failures, mu);
        });
        // unicyclic checks on every tree-plus-one-edge build
        std::vector<Graph> unicyclic = unicyclic_supergraphs(n);
        parallel_for_index(unicyclic.size(), [&](size_t idx) {
            const Graph& g = unicyclic[idx];
            SymFunc x = csf(g);
            std::string code = format_edge_list(g);
            for (char& c : code)
                if (c == '\n') c = ';';
            std::optional<int> direct = girth_direct(g);
            require(girth_from_csf(x) == direct, n, code, "girth",
                    "girth_from_csf != girth_direct", report.failures, mu);
            // broken-circuit expansion for every cycle edge
            std::vector<int> cyc = cycle_vertices(g);
            std::vector<bool> on_cycle(static_cast<size_t>(g.order()), false);
            for (int v : cyc) on_cycle[static_cast<size_t>(v)] = true;
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.edge(e);
                if (!on_cycle[static_cast<size_t>(u)] || !on_cycle[static_cast<size_t>(v)])
                    continue;
                require(csf_unicyclic_broken_circuit(g, e) == x, n, code, "broken-circuit",
                        "reduced sum != csf", report.failures, mu);
            }
        });
    }
    sort_findings(report.failures);
    report.elapsed_seconds = timer.seconds();
    return report;
}

ScanReport conjecture_scan(int max_n, bool override_caps) {
    ScanReport report;
    report.family = "xi-tables";
    report.max_n = max_n;
    report.invariant = "conjectures";
    check_cap(max_n, kConjectureScanCap, override_caps, "conjecture_scan");
    Timer timer;
    for (int n = 1; n <= max_n; ++n) {
        XiTable table = xi_table(n);
        long long entries = 0;
        bool have_entry = false;
        BigInt min_zxi = 0, max_zxi = 0;
        for (const auto& [cell, row] : table.cells()) {
            for (const auto& [mu, value] : row) {
                ++entries;
                BigRational signed_value =
                    (mu.even_part_count() % 2 == 0) ? value : BigRational(-value);
                if (signed_value < 0) {
                    report.failures.push_back(
                        Finding{n, mu.to_string(), "", "positivity",
                                "(-1)^eps(mu) xi = " + csf::to_string(signed_value) + " at cell (" +
                                    std::to_string(cell.first) + "," +
                                    std::to_string(cell.second) + ")"});
                }
                BigRational zxi = value * BigRational(z_of(mu));
                if (!is_integer(zxi)) {
                    report.failures.push_back(
                        Finding{n, mu.to_string(), "", "z-integrality",
                                "xi*z = " + csf::to_string(zxi) + " at cell (" +
                                    std::to_string(cell.first) + "," +
                                    std::to_string(cell.second) + ")"});
                } else {
                    BigInt v = to_integer(zxi);
                    if (!have_entry) {
                        min_zxi = max_zxi = v;
                        have_entry = true;
                    } else {
                        if (v < min_zxi) min_zxi = v;
                        if (v > max_zxi) max_zxi = v;
                    }
                }
            }
        }
        report.counts_per_order.emplace_back(n, entries);
        report.notes.push_back("n=" + std::to_string(n) + " xi*z range [" +
                               csf::to_string(min_zxi) + ", " + csf::to_string(max_zxi) + "]");
    }
    sort_findings(report.failures);
    report.elapsed_seconds = timer.seconds();
    return report;
}

}  // namespace csf
