#include "csf/combinatorics.hpp"

#include <stdexcept>

namespace csf {

BigRational parse_rational(const std::string& text) {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return BigRational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

BigInt binomial(long long a, long long b) {
    if (a < 0) throw std::invalid_argument("binomial: a must be >= 0");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt result = 1;
    for (long long i = 0; i < b; ++i) {
        result *= (a - i);
        result /= (i + 1);  // exact: product of i+1 consecutive integers
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

BigInt z_of(const Partition& p) {
    BigInt z = 1;
    const auto& parts = p.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        int mult = static_cast<int>(j - i);
        for (int t = 0; t < mult; ++t) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

BigInt omega(const std::vector<int>& capacities, int balls) {
    if (balls < 0) return 0;
    std::vector<BigInt> dp(static_cast<size_t>(balls) + 1);
    dp[0] = 1;
    for (int cap : capacities) {
        if (cap < 0) throw std::invalid_argument("omega: capacities must be >= 0");
        std::vector<BigInt> next(dp.size());
        for (int t = 0; t <= balls; ++t) {
            BigInt sum = 0;
            for (int u = 0; u <= std::min(cap, t); ++u) sum += dp[static_cast<size_t>(t - u)];
            next[static_cast<size_t>(t)] = sum;
        }
        dp = std::move(next);
    }
    return dp[static_cast<size_t>(balls)];
}

BigInt psi(const Partition& lambda, int n, int a, int b) {
    if (lambda.weight() != n) throw std::invalid_argument("psi: |lambda| != n");
    if (a <= 0 || b < 0) throw std::invalid_argument("psi: requires a > 0, b >= 0");
    int l = lambda.length();
    BigInt outer = binomial(l - 1, l - n + a + b);
    if (outer == 0) return 0;
    BigInt inner = 0;
    for (int k = 0; k < l; ++k) inner += binomial(lambda.part(k) - 1, a);
    BigInt value = outer * inner;
    return ((a + b) % 2 == 0) ? value : -value;
}

BigInt phi(const Partition& lambda, int n, int i, int j) {
    if (lambda.weight() != n) throw std::invalid_argument("phi: |lambda| != n");
    if (j < 1 || j > i) throw std::invalid_argument("phi: requires 1 <= j <= i");
    int l = lambda.length();
    BigInt outer = binomial(l - 1, l - n + i);
    if (outer == 0) return 0;
    BigInt total = 0;
    for (int d = 1; d <= j; ++d) {
        BigInt inner = 0;
        for (int k = 0; k < l; ++k) inner += binomial(lambda.part(k) - 1, d);
        BigInt term = binomial(i - d, j - d) * inner;
        total += (d % 2 == 0) ? term : -term;
    }
    BigInt value = outer * total;
    return ((i + j) % 2 == 0) ? value : -value;
}

}  // namespace csf
