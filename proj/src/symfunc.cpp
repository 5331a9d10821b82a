#include "csf/symfunc.hpp"

#include <sstream>
#include <stdexcept>

#include "csf/combinatorics.hpp"

namespace csf {

BigRational SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? BigRational(0) : it->second;
}

void SymFunc::add_coeff(const Partition& p, const BigRational& c) {
    if (p.weight() != degree_)
        throw std::invalid_argument("partition weight " + std::to_string(p.weight()) +
                                    " does not match degree " + std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void SymFunc::set_coeff(const Partition& p, BigRational c) {
    if (p.weight() != degree_)
        throw std::invalid_argument("partition weight does not match degree");
    if (c == 0)
        coeffs_.erase(p);
    else
        coeffs_[p] = std::move(c);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("basis/degree mismatch in symmetric-function sum");
    for (const auto& [p, c] : other.coeffs_) add_coeff(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("basis/degree mismatch in symmetric-function sum");
    for (const auto& [p, c] : other.coeffs_) add_coeff(p, -c);
    return *this;
}

SymFunc SymFunc::scaled(const BigRational& s) const {
    SymFunc out(basis_, degree_);
    if (s == 0) return out;
    for (const auto& [p, c] : coeffs_) out.coeffs_[p] = c * s;
    return out;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    const char* tag = basis_ == Basis::P ? "p" : "h";
    std::string out;
    for (const auto& [p, c] : coeffs_) {
        out += csf::to_string(c) + " " + tag + p.to_string() + "\n";
    }
    out.pop_back();
    return out;
}

SymFunc SymFunc::parse(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    bool basis_known = false;
    Basis basis = Basis::P;
    std::vector<std::pair<Partition, BigRational>> entries;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string coef_tok, term_tok;
        if (!(ls >> coef_tok)) continue;
        if (coef_tok == "0" && !(ls >> term_tok)) continue;
        if (term_tok.empty() && !(ls >> term_tok))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": missing term");
        if (term_tok.size() < 3 || (term_tok[0] != 'p' && term_tok[0] != 'h'))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected p[...] or h[...], got '" + term_tok + "'");
        Basis b = term_tok[0] == 'p' ? Basis::P : Basis::H;
        if (basis_known && b != basis)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": mixed bases");
        basis = b;
        basis_known = true;
        entries.emplace_back(Partition::parse(term_tok.substr(1)), parse_rational(coef_tok));
    }
    if (entries.empty()) return SymFunc(Basis::P, 0);
    int degree = entries.front().first.weight();
    SymFunc out(basis, degree);
    for (auto& [p, c] : entries) out.add_coeff(p, c);
    return out;
}

SymFunc multiply_by_p(const SymFunc& f, const Partition& mu) {
    if (f.basis() != Basis::P)
        throw std::invalid_argument("multiply_by_p requires the P basis");
    SymFunc out(Basis::P, f.degree() + mu.weight());
    for (const auto& [p, c] : f.coeffs()) out.add_coeff(p.merged_with(mu), c);
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::P || g.basis() != Basis::P)
        throw std::invalid_argument("product is implemented in the P basis only");
    SymFunc out(Basis::P, f.degree() + g.degree());
    for (const auto& [pf, cf] : f.coeffs())
        for (const auto& [pg, cg] : g.coeffs()) out.add_coeff(pf.merged_with(pg), cf * cg);
    return out;
}

BigRational hall_inner_product(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != Basis::P || g.basis() != Basis::P)
        throw std::invalid_argument("hall_inner_product requires the P basis");
    if (f.degree() != g.degree())
        throw std::invalid_argument("hall_inner_product: degree mismatch");
    BigRational total = 0;
    // iterate the sparser side
    const SymFunc& small = f.coeffs().size() <= g.coeffs().size() ? f : g;
    const SymFunc& large = f.coeffs().size() <= g.coeffs().size() ? g : f;
    for (const auto& [p, c] : small.coeffs()) {
        BigRational other = large.coeff(p);
        if (other == 0) continue;
        total += c * other * BigRational(z_of(p));
    }
    return total;
}

SymFunc two_part_portion(const SymFunc& f) {
    SymFunc out(f.basis(), f.degree());
    for (const auto& [p, c] : f.coeffs())
        if (p.length() == 2) out.add_coeff(p, c);
    return out;
}

BigInt specialize_principal(const SymFunc& f, int k) {
    if (f.basis() != Basis::P)
        throw std::invalid_argument("specialize_principal requires the P basis");
    if (k < 0) throw std::invalid_argument("specialize_principal: k must be >= 0");
    BigInt total = 0;
    for (const auto& [p, c] : f.coeffs()) {
        BigInt ci = to_integer(c);  // throws on non-integral coefficients
        BigInt pw = 1;
        for (int i = 0; i < p.length(); ++i) pw *= k;
        total += ci * pw;
    }
    return total;
}

namespace {

// h_m = sum_{mu |- m} p_mu / z_mu
SymFunc h_part_in_p(int m) {
    SymFunc out(Basis::P, m);
    for (const Partition& mu : partitions_of(m))
        out.add_coeff(mu, BigRational(1) / BigRational(z_of(mu)));
    return out;
}

SymFunc h_lambda_in_p(const Partition& lambda) {
    SymFunc out(Basis::P, 0);
    out.add_coeff(Partition{}, 1);
    for (int i = 0; i < lambda.length(); ++i) out = multiply(out, h_part_in_p(lambda.part(i)));
    return out;
}

// Exact dense solver for the h-to-p transition at one degree: factors the
// matrix once, then converts any number of right-hand sides.
class PToHSolver {
public:
    explicit PToHSolver(int n) : n_(n), parts_(partitions_of(n)) {
        size_t m = parts_.size();
        std::map<Partition, size_t, PartitionOrder> index;
        for (size_t i = 0; i < m; ++i) index[parts_[i]] = i;
        // column j holds h_{parts_[j]} expanded over p-rows
        matrix_.assign(m, std::vector<BigRational>(m, BigRational(0)));
        for (size_t j = 0; j < m; ++j) {
            SymFunc h = h_lambda_in_p(parts_[j]);
            for (const auto& [p, c] : h.coeffs()) matrix_[index.at(p)][j] = c;
        }
        perm_.resize(m);
        factor();
    }

    SymFunc convert(const SymFunc& f) const {
        size_t m = parts_.size();
        std::vector<BigRational> rhs(m, BigRational(0));
        for (size_t i = 0; i < m; ++i) rhs[i] = f.coeff(parts_[i]);
        std::vector<BigRational> sol = solve(rhs);
        SymFunc out(Basis::H, n_);
        for (size_t i = 0; i < m; ++i)
            if (sol[i] != 0) out.set_coeff(parts_[i], sol[i]);
        return out;
    }

    const std::vector<Partition>& index_partitions() const { return parts_; }

private:
    void factor() {
        size_t m = parts_.size();
        for (size_t i = 0; i < m; ++i) perm_[i] = i;
        for (size_t col = 0; col < m; ++col) {
            size_t pivot = col;
            while (pivot < m && matrix_[perm_[pivot]][col] == 0) ++pivot;
            if (pivot == m) throw std::logic_error("singular transition matrix");
            std::swap(perm_[col], perm_[pivot]);
            const BigRational& pv = matrix_[perm_[col]][col];
            for (size_t row = col + 1; row < m; ++row) {
                BigRational& lead = matrix_[perm_[row]][col];
                if (lead == 0) continue;
                BigRational factor = lead / pv;
                lead = factor;  // store the multiplier in place (LU)
                for (size_t k = col + 1; k < m; ++k)
                    matrix_[perm_[row]][k] -= factor * matrix_[perm_[col]][k];
            }
        }
    }

    std::vector<BigRational> solve(const std::vector<BigRational>& rhs) const {
        size_t m = parts_.size();
        std::vector<BigRational> y(m);
        for (size_t i = 0; i < m; ++i) {
            BigRational acc = rhs[perm_[i]];
            for (size_t k = 0; k < i; ++k) acc -= matrix_[perm_[i]][k] * y[k];
            y[i] = acc;
        }
        std::vector<BigRational> x(m);
        for (size_t ii = m; ii-- > 0;) {
            BigRational acc = y[ii];
            for (size_t k = ii + 1; k < m; ++k) acc -= matrix_[perm_[ii]][k] * x[k];
            x[ii] = acc / matrix_[perm_[ii]][ii];
        }
        return x;
    }

    int n_;
    std::vector<Partition> parts_;
    std::vector<std::vector<BigRational>> matrix_;
    std::vector<size_t> perm_;
};

}  // namespace

SymFunc h_to_p(const SymFunc& f) {
    if (f.basis() != Basis::H) throw std::invalid_argument("h_to_p expects the H basis");
    SymFunc out(Basis::P, f.degree());
    for (const auto& [lambda, c] : f.coeffs()) out += h_lambda_in_p(lambda).scaled(c);
    return out;
}

SymFunc p_to_h(const SymFunc& f) {
    if (f.basis() != Basis::P) throw std::invalid_argument("p_to_h expects the P basis");
    return PToHSolver(f.degree()).convert(f);
}

std::map<std::pair<int, int>, SymFunc> psi_series(int n) {
    if (n < 1) throw std::invalid_argument("psi_series: n must be >= 1");
    std::map<std::pair<int, int>, SymFunc> cells;
    std::vector<Partition> parts = partitions_of(n);
    for (int a = 1; a <= n - 1; ++a) {
        for (int b = 0; a + b <= n - 1; ++b) {
            SymFunc cell(Basis::P, n);
            for (const Partition& lambda : parts) {
                BigInt v = psi(lambda, n, a, b);
                if (v != 0) cell.add_coeff(lambda, BigRational(v) / BigRational(z_of(lambda)));
            }
            if (!cell.is_zero()) cells.emplace(std::make_pair(a, b), std::move(cell));
        }
    }
    return cells;
}

std::map<std::pair<int, int>, SymFunc> phi_series(int n) {
    if (n < 1) throw std::invalid_argument("phi_series: n must be >= 1");
    std::map<std::pair<int, int>, SymFunc> cells;
    std::vector<Partition> parts = partitions_of(n);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = 1; j <= i; ++j) {
            SymFunc cell(Basis::P, n);
            for (const Partition& lambda : parts) {
                BigInt v = phi(lambda, n, i, j);
                if (v != 0) cell.add_coeff(lambda, BigRational(v) / BigRational(z_of(lambda)));
            }
            if (!cell.is_zero()) cells.emplace(std::make_pair(i, j), std::move(cell));
        }
    }
    return cells;
}

BigRational XiTable::xi(const Partition& mu, int i, int j) const {
    auto cell = cells_.find({i, j});
    if (cell == cells_.end()) return 0;
    auto it = cell->second.find(mu);
    return it == cell->second.end() ? BigRational(0) : it->second;
}

XiTable xi_table(int n) {
    if (n < 1) throw std::invalid_argument("xi_table: n must be >= 1");
    XiTable table(n);
    PToHSolver solver(n);
    for (const auto& [cell, f] : psi_series(n)) {
        SymFunc h = solver.convert(f);
        if (h.is_zero()) continue;
        auto& entry = table.cells()[cell];
        for (const auto& [mu, c] : h.coeffs()) entry[mu] = c;
    }
    return table;
}

}  // namespace csf
