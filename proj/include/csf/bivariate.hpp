#pragma once

#include <map>
#include <string>
#include <utility>

#include "csf/numbers.hpp"

namespace csf {

// Sparse bivariate polynomial with big-integer coefficients over two
// nonnegative exponents. Houses both S_T(q,r) and K_T(x,y).
class BivariatePolynomial {
public:
    // Degree-lex term order: total degree ascending, then first exponent.
    struct TermOrder {
        bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
            long ta = a.first + a.second, tb = b.first + b.second;
            if (ta != tb) return ta < tb;
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        }
    };
    using TermMap = std::map<std::pair<int, int>, BigInt, TermOrder>;

    BivariatePolynomial() = default;

    BigInt coeff(int e1, int e2) const;
    void add_term(int e1, int e2, const BigInt& c);
    void set_term(int e1, int e2, BigInt c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_exponent1() const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    BivariatePolynomial& operator-=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b);
    bool operator==(const BivariatePolynomial&) const = default;

    // Exact evaluation at a rational point.
    BigRational evaluate(const BigRational& v1, const BigRational& v2) const;

    // One line per term in degree-lex order: "<coef> q^i r^j".
    // The zero polynomial serializes as the single line "0".
    std::string to_string(const std::string& var1, const std::string& var2) const;
    // Accepts any variable letters; only the exponents matter.
    static BivariatePolynomial parse(const std::string& text);

private:
    TermMap terms_;
};

}  // namespace csf
