#pragma once

#include <vector>

#include "csf/graph.hpp"

namespace csf {

// One free tree per isomorphism class, n <= 16. Rooted level-sequence
// successor enumeration with a canonical-code filter; deterministic order.
std::vector<Graph> enumerate_trees(int n);

// One connected graph per isomorphism class, n <= 6, deterministic order.
std::vector<Graph> enumerate_connected_graphs(int n);

// All connected unicyclic graphs of order n as tree-plus-one-edge builds;
// contains isomorphic duplicates. Verification fodder, not a class list.
std::vector<Graph> unicyclic_supergraphs(int n);

}  // namespace csf
