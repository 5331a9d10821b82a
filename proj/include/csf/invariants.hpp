#pragma once

#include <optional>
#include <vector>

#include "csf/bivariate.hpp"
#include "csf/graph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// Chromatic symmetric function in the power-sum basis:
// X_G = sum_{A subseteq E} (-1)^{|A|} p_{type(A)}, over all 2^|E| subsets.
SymFunc csf(const Graph& g);

// Broken-circuit expansion for a connected unicyclic graph: the sum is
// restricted to subsets A with C - e0 not a subset of A, where C is the
// unique cycle and e0 (an edge index) lies on it. Equals csf(g).
SymFunc csf_unicyclic_broken_circuit(const Graph& g, int e0);

// S_T = sum over subtrees q^{|S|} r^{|L(S)|}.
BivariatePolynomial subtree_polynomial_direct(const Graph& t);
// K_T = sum over nonempty A of x^{|A|} y^{|K(A)|}.
BivariatePolynomial connector_polynomial_direct(const Graph& t);

// The double sums recovering K_T and S_T from the coefficients of X_T.
// A non-integer resulting coefficient signals a non-tree input.
BivariatePolynomial connector_from_csf(const SymFunc& x, int n);
BivariatePolynomial subtree_from_csf(const SymFunc& x, int n);

// Checks S(q,r) = K(qr, q(1-r)) as an exact polynomial identity, plus the
// inverse substitution K(x,y) = S(x+y, x/(x+y)) at rational sample points
// with x+y != 0.
bool substitution_identity_check(const BivariatePolynomial& s, const BivariatePolynomial& k);

// pi_i = number of i-edge paths, sigma_k = number of k-edge stars,
// delta_j = number of degree-j vertices. Indexed from 1.
struct SequenceTriple {
    std::vector<long long> path_seq;
    std::vector<long long> star_seq;
    std::vector<long long> degree_seq;

    long long pi(int i) const;
    long long sigma(int k) const;
    long long delta(int j) const;
    // Largest i with pi_i > 0; 0 for an edgeless tree.
    int diameter() const;
};

// Extraction from a tree's subtree polynomial: pi_1 = n-1,
// pi_i = [q^i r^2] s for i >= 2, sigma_k = [q^k r^k] s, delta by binomial
// inversion. A negative derived delta signals invalid input.
SequenceTriple sequences_from_stp(const BivariatePolynomial& s, int n);

// Direct structural counterpart, used as the oracle.
SequenceTriple sequences_direct(const Graph& t);

struct ScalarExtractions {
    int n = 0;
    BigInt edges;
    int components = 0;
    // Filled only when the tree predicate (components == 1, edges == n-1)
    // holds: |c_{(j,1^{n-j})}| indexed by j = 2..n, and the leaf count.
    std::optional<std::vector<BigInt>> subtree_counts;
    std::optional<BigInt> leaves;
};

ScalarExtractions scalar_extractions(const SymFunc& x);

// Largest k where sum_{len(lambda)=k} c_lambda != (-1)^{n-k} C(m, n-k)
// gives girth n-k+1; equality at every level means acyclic (nullopt).
std::optional<int> girth_from_csf(const SymFunc& x);

}  // namespace csf
