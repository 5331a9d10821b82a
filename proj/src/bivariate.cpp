#include "csf/bivariate.hpp"

#include <sstream>
#include <stdexcept>

namespace csf {

BigInt BivariatePolynomial::coeff(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(int e1, int e2, const BigInt& c) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void BivariatePolynomial::set_term(int e1, int e2, BigInt c) {
    if (e1 < 0 || e2 < 0) throw std::invalid_argument("negative exponent");
    if (c == 0)
        terms_.erase({e1, e2});
    else
        terms_[{e1, e2}] = std::move(c);
}

int BivariatePolynomial::max_exponent1() const {
    int best = 0;
    for (const auto& [exps, c] : terms_) best = std::max(best, exps.first);
    return best;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [exps, c] : other.terms_) add_term(exps.first, exps.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
    for (const auto& [exps, c] : other.terms_) add_term(exps.first, exps.second, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

BigRational BivariatePolynomial::evaluate(const BigRational& v1, const BigRational& v2) const {
    BigRational total = 0;
    for (const auto& [exps, c] : terms_) {
        BigRational term(c);
        for (int i = 0; i < exps.first; ++i) term *= v1;
        for (int i = 0; i < exps.second; ++i) term *= v2;
        total += term;
    }
    return total;
}

std::string BivariatePolynomial::to_string(const std::string& var1,
                                           const std::string& var2) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, c] : terms_) {
        out += csf::to_string(c) + " " + var1 + "^" + std::to_string(exps.first) + " " + var2 +
               "^" + std::to_string(exps.second) + "\n";
    }
    out.pop_back();
    return out;
}

namespace {

int parse_exponent(const std::string& tok, int line_no) {
    size_t caret = tok.find('^');
    if (caret == std::string::npos || caret + 1 >= tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected <var>^<exp>, got '" + tok + "'");
    size_t used = 0;
    int e = std::stoi(tok.substr(caret + 1), &used);
    if (used != tok.size() - caret - 1 || e < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad exponent in '" +
                                    tok + "'");
    return e;
}

}  // namespace

BivariatePolynomial BivariatePolynomial::parse(const std::string& text) {
    BivariatePolynomial out;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string coef_tok, t1, t2;
        if (!(ls >> coef_tok)) continue;  // blank line
        if (coef_tok == "0" && !(ls >> t1)) continue;
        if (t1.empty() && !(ls >> t1))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": missing term");
        if (!(ls >> t2))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": missing second variable");
        BigInt c;
        try {
            c = BigInt(coef_tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": bad coefficient '" + coef_tok + "'");
        }
        out.add_term(parse_exponent(t1, line_no), parse_exponent(t2, line_no), c);
    }
    return out;
}

}  // namespace csf
