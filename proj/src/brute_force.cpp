#include "chiy/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chiy::oracle {

MultiPoly::MultiPoly(int variables) : variables_(variables) {
    if (variables < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int variables, const YPolynomial& c) {
    MultiPoly p(variables);
    p.add_term(std::vector<int>(static_cast<size_t>(variables), 0), c);
    return p;
}

void MultiPoly::add_term(std::vector<int> exponents, const YPolynomial& coeff) {
    if (static_cast<int>(exponents.size()) != variables_)
        throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(exponents), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::multiplied(const MultiPoly& o, int max_total_degree) const {
    MultiPoly result(variables_);
    for (const auto& [ea, ca] : terms_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : o.terms_) {
            int db = std::accumulate(eb.begin(), eb.end(), 0);
            if (da + db > max_total_degree) continue;
            std::vector<int> e = ea;
            for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            result.add_term(std::move(e), ca * cb);
        }
    }
    return result;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly result(variables_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == d) result.add_term(e, c);
    }
    return result;
}

MultiPoly elementary_symmetric(int m, int j) {
    if (j < 0 || j > m) throw std::invalid_argument("elementary_symmetric: need 0 <= j <= m");
    MultiPoly acc(m);
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(chosen.size()) == j) {
            std::vector<int> e(static_cast<size_t>(m), 0);
            for (int v : chosen) e[static_cast<size_t>(v)] = 1;
            acc.add_term(std::move(e), YPolynomial(1));
            return;
        }
        for (int v = next; v < m; ++v) {
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return acc;
}

ChernPolynomial symmetric_to_chern(const MultiPoly& poly, int n) {
    MultiPoly rest = poly;
    ChernPolynomial out;
    while (!rest.is_zero()) {
        // lex-greatest exponent vector; for a symmetric polynomial its entries
        // arrive weakly decreasing
        std::vector<int> exps = rest.terms().rbegin()->first;
        YPolynomial c = rest.terms().rbegin()->second;
        if (!std::is_sorted(exps.rbegin(), exps.rend()))
            throw std::invalid_argument("symmetric_to_chern: polynomial is not symmetric");
        // matching product of elementary symmetric polynomials:
        // e_1^{a1-a2} e_2^{a2-a3} ... with the exponent list padded by zero
        std::vector<int> parts;
        MultiPoly product = MultiPoly::constant(poly.variables(), YPolynomial(1));
        for (size_t j = 0; j < exps.size(); ++j) {
            int mult = exps[j] - (j + 1 < exps.size() ? exps[j + 1] : 0);
            for (int t = 0; t < mult; ++t) {
                parts.push_back(static_cast<int>(j) + 1);
                product = product.multiplied(elementary_symmetric(poly.variables(), static_cast<int>(j) + 1), n);
            }
        }
        out += ChernPolynomial::monomial(Partition(std::move(parts)), c);
        MultiPoly scaled(poly.variables());
        for (const auto& [e, pc] : product.terms()) scaled.add_term(e, pc * c);
        rest -= scaled;
    }
    return out;
}

ChernPolynomial expand_product_direct(const std::vector<YPolynomial>& factor, int n) {
    if (static_cast<int>(factor.size()) < n + 1)
        throw std::invalid_argument("expand_product_direct: need factor coefficients up to x^n");
    if (n == 0) return ChernPolynomial(YPolynomial(1));
    MultiPoly product = MultiPoly::constant(n, YPolynomial(1));
    // prod_i factor(x_i), truncated at total degree n
    for (int i = 0; i < n; ++i) {
        MultiPoly fi(n);
        for (int k = 0; k <= n; ++k) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(i)] = k;
            fi.add_term(std::move(e), factor[static_cast<size_t>(k)]);
        }
        product = product.multiplied(fi, n);
    }
    ChernPolynomial result = symmetric_to_chern(product.homogeneous_part(n), n);
    result.set_grade(n);
    return result;
}

std::vector<YPolynomial> divide_one_by(const std::vector<YPolynomial>& u) {
    if (u.empty()) throw std::invalid_argument("divide_one_by: empty series");
    if (!u[0].is_constant() || u[0].is_zero())
        throw std::domain_error("divide_one_by: leading coefficient must be a nonzero rational");
    Rational lead = u[0].constant_term();
    std::vector<YPolynomial> w(u.size());
    w[0] = YPolynomial(lead.inverse());
    for (size_t k = 1; k < u.size(); ++k) {
        YPolynomial acc;
        for (size_t j = 1; j <= k; ++j) acc += u[j] * w[k - j];
        w[k] = acc * (-lead.inverse());
    }
    return w;
}

ChernNumbers projective_space_chern(int n) {
    if (n < 0) throw std::invalid_argument("projective_space_chern: negative dimension");
    // coefficients of (1+h)^{n+1} mod h^{n+1}, by repeated multiplication
    std::vector<long long> total(static_cast<size_t>(n) + 1, 0);
    total[0] = 1;
    for (int rep = 0; rep < n + 1; ++rep) {
        std::vector<long long> next(total.size(), 0);
        for (size_t k = 0; k < total.size(); ++k) {
            next[k] += total[k];
            if (k + 1 < total.size()) next[k + 1] += total[k];
        }
        total = std::move(next);
    }
    ChernNumbers chern(n);
    for (const Partition& index : partitions_of(n)) {
        long long value = 1;
        for (int part : index.parts()) value *= total[static_cast<size_t>(part)];
        chern.set(index, value);  // integral of h^n is 1
    }
    return chern;
}

}  // namespace chiy::oracle
