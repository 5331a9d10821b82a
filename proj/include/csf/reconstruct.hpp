#pragma once

#include <vector>

#include "csf/bivariate.hpp"
#include "csf/families.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// d_a = |c_{(a,n-a)}|, 1 <= a <= floor(n/2), read off a two-part portion.
std::vector<BigInt> d_vector(const SymFunc& two_part, int n);

// Caterpillar criterion diam(T)-1 = n - delta_1(T), with stars explicitly
// excluded. Requires n >= 4 and a tree's csf.
bool is_caterpillar_by_csf(const SymFunc& x);

// Which printed form of the leg-multiplicity recurrence to evaluate; both
// must agree and tests cross-check them.
enum class OmegaRoute { Direct, Literal };

// Leg partition of a spider from its subtree polynomial. The 3-leg case
// solves an integer quadratic; more legs recover part multiplicities
// iteratively through the balls-in-boxes counts.
SpiderSpec spider_from_stp(const BivariatePolynomial& s, int n,
                           OmegaRoute route = OmegaRoute::Direct);

// Leg partition from the two-part portion of X_T: take d(T) verbatim when
// it is a partition, otherwise iron out the trailing 2's, then conjugate.
// Accepts degenerate two-leg "spiders" (paths) for the squid pipeline.
SpiderSpec spider_from_two_part(const SymFunc& y, int n);

// Leaf-number sequence of a caterpillar with positive leaf numbers from the
// singleton-free coefficients of X_T, up to reversal. Ambiguity signals a
// hypothesis violation.
CaterpillarSpec caterpillar_from_csf(const SymFunc& x, int n);

// Cycle length from the girth, tentacles through the spider averaging
// identity. Non-integral averaged coefficients signal non-squid input.
SquidSpec squid_from_csf(const SymFunc& x, int n);

// Cyclic leaf-count list of a crab with distinct degrees, from the
// singleton-free coefficients, up to rotation/reflection.
CrabSpec crab_from_csf(const SymFunc& x, int n);

}  // namespace csf
