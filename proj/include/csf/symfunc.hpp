#pragma once

#include <map>
#include <string>
#include <utility>

#include "csf/numbers.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class Basis { P, H };

// Sparse linear combination of basis elements indexed by partitions of a
// fixed weight, with exact rational coefficients. Zero coefficients are
// pruned eagerly so equality is structural.
class SymFunc {
public:
    using CoeffMap = std::map<Partition, BigRational, PartitionOrder>;

    SymFunc() : basis_(Basis::P), degree_(0) {}
    SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigRational coeff(const Partition& p) const;
    // Adds c to the coefficient of p; prunes on zero. p must have weight = degree.
    void add_coeff(const Partition& p, const BigRational& c);
    void set_coeff(const Partition& p, BigRational c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const BigRational& s) const;
    bool operator==(const SymFunc&) const = default;

    // One term per line in canonical partition order: "<coef> p[2,1]" or
    // "<coef> h[2,2]". The zero function serializes as the single line "0".
    std::string to_string() const;
    static SymFunc parse(const std::string& text);

private:
    Basis basis_;
    int degree_;
    CoeffMap coeffs_;
};

// p_lambda * p_mu = p_{lambda union mu}; P basis only.
SymFunc multiply_by_p(const SymFunc& f, const Partition& mu);
// Full product of two P-basis functions.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// <p_lambda, p_mu> = delta * z_lambda. Both arguments in the P basis with
// equal degrees.
BigRational hall_inner_product(const SymFunc& f, const SymFunc& g);

// Restriction to index partitions of length exactly 2.
SymFunc two_part_portion(const SymFunc& f);

// sum_lambda f_lambda * k^{len(lambda)} for integral f; for f = X_G this is
// the chromatic polynomial value chi_G(k).
BigInt specialize_principal(const SymFunc& f, int k);

// h_m = sum_{mu |- m} p_mu / z_mu, extended multiplicatively.
SymFunc h_to_p(const SymFunc& f);
// Exact Gaussian elimination over the degree-n transition matrix.
SymFunc p_to_h(const SymFunc& f);

// Cell map of the generating symmetric functions: coefficient of x^a y^b in
// Psi_n is sum_lambda psi(lambda,a,b) p_lambda / z_lambda, and analogously
// for Phi_n with phi over cells (i,j), 1 <= j <= i. Only nonzero cells are
// retained.
std::map<std::pair<int, int>, SymFunc> psi_series(int n);
std::map<std::pair<int, int>, SymFunc> phi_series(int n);

// xi(mu,i,j): the h-basis coefficients of Psi_n, cell by cell.
class XiTable {
public:
    explicit XiTable(int n) : n_(n) {}
    int degree() const { return n_; }

    using CellMap = std::map<std::pair<int, int>, std::map<Partition, BigRational, PartitionOrder>>;
    const CellMap& cells() const { return cells_; }
    CellMap& cells() { return cells_; }

    BigRational xi(const Partition& mu, int i, int j) const;

private:
    int n_;
    CellMap cells_;
};

XiTable xi_table(int n);

}  // namespace csf
