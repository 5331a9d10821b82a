#pragma once

#include <vector>

#include "csf/numbers.hpp"
#include "csf/partition.hpp"

namespace csf {

// C(a,b) with the zero convention: 0 whenever b < 0 or b > a.
// a < 0 is rejected; the coefficient formulas below rely on the convention
// to kill out-of-range terms.
BigInt binomial(long long a, long long b);

BigInt factorial(int n);

Partition conjugate(const Partition& p);

// z_lambda = prod_i i^{m_i} * m_i!  (automorphism count of a cycle type).
BigInt z_of(const Partition& p);

// Number of ways to place `balls` indistinguishable balls into
// distinguishable boxes with the given per-box capacities. Polynomial DP:
// product of truncated geometric series, coefficient extraction.
BigInt omega(const std::vector<int>& capacities, int balls);

// psi(lambda,a,b) = (-1)^(a+b) C(l-1, l-n+a+b) sum_k C(lambda_k - 1, a).
// Requires |lambda| = n, a > 0, b >= 0.
BigInt psi(const Partition& lambda, int n, int a, int b);

// phi(lambda,i,j) = (-1)^(i+j) C(l-1, l-n+i)
//                   * sum_{d=1}^{j} (-1)^d C(i-d, j-d) sum_k C(lambda_k - 1, d).
// Requires |lambda| = n, 1 <= j <= i.
BigInt phi(const Partition& lambda, int n, int i, int j);

}  // namespace csf
