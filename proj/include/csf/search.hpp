#pragma once

#include <functional>
#include <string>
#include <vector>

namespace csf {

// One reported finding: a collision pair or an identity failure.
struct Finding {
    int order = 0;
    std::string code_a;
    std::string code_b;
    std::string invariant;
    std::string detail;
};

struct ScanReport {
    std::string family;
    int max_n = 0;
    std::string invariant;
    std::vector<std::pair<int, long long>> counts_per_order;
    std::vector<Finding> collisions;
    std::vector<Finding> failures;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    std::string to_text() const;
    // One JSON record per finding: order, code_a, code_b, invariant, detail.
    std::string to_records() const;
};

enum class TreeInvariant { Csf, Stp };

// Desk-scale caps; the CLI can override them with a warning.
constexpr int kCsfScanCap = 15;
constexpr int kStpScanCap = 13;
constexpr int kGraphScanCap = 6;
constexpr int kConjectureScanCap = 12;
constexpr int kIdentitySweepCap = 10;

// Buckets every tree with n <= max_n by the exact text serialization of the
// invariant; non-isomorphic members of one bucket are collisions.
ScanReport distinguishability_scan(int max_n, TreeInvariant invariant,
                                   bool override_caps = false);

// Same bucketing over connected graphs up to isomorphism.
ScanReport graph_collision_scan(int max_n, bool override_caps = false);

// Per-tree verification of the transition formulas, the substitution
// identity, the level-count identity, sequence extraction, chromatic
// specialization, and (on tree-plus-edge unicyclic graphs) the
// broken-circuit expansion and girth recovery. Failures are data.
ScanReport identity_sweep(int max_n, bool override_caps = false);

// Tabulates xi for each n <= max_n and tests the positivity and
// z-integrality conjectures.
ScanReport conjecture_scan(int max_n, bool override_caps = false);

// Worker count for parallel scans: CSF_WORKERS, defaulting to the hardware
// concurrency, clamped to [1, 64].
int worker_count();

// Runs fn(i) for i in [0, count) across worker threads; results must be
// written to per-index slots so reduction order stays deterministic.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace csf
