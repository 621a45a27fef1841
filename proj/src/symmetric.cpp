#include "chiy/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace chiy {

ChernPolynomial power_sum_in_elementary(int k) {
    if (k < 1) throw std::invalid_argument("power_sum_in_elementary: k must be >= 1");
    static std::mutex mutex;
    static std::vector<ChernPolynomial> memo;  // memo[j-1] = p_j
    std::lock_guard<std::mutex> lock(mutex);
    for (int j = static_cast<int>(memo.size()) + 1; j <= k; ++j) {
        // p_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j
        ChernPolynomial p = ChernPolynomial::chern_class(j) * Rational((j % 2) ? j : -j);
        for (int i = 1; i < j; ++i) {
            ChernPolynomial term = ChernPolynomial::chern_class(i) * memo[static_cast<size_t>(j - i - 1)];
            if (i % 2 == 0) term = -term;
            p += term;
        }
        p.set_grade(j);
        memo.push_back(std::move(p));
    }
    return memo[static_cast<size_t>(k - 1)];
}

ChernPolynomial genus_expand(const TruncatedSeries& factor, int n) {
    if (n < 0) throw std::invalid_argument("genus_expand: negative dimension");
    if (factor.order() < n + 1) throw std::invalid_argument("genus_expand: series order too small");
    const YPolynomial& c0 = factor.coeff(0);
    if (c0.constant_term().is_zero())
        throw std::domain_error("genus_expand: constant term is not a unit");

    if (n == 0) return ChernPolynomial(YPolynomial(1));

    // Exact coefficient mode: the weight-n component of the product has
    // y-degree at most n*d, d the largest y-degree among the coefficients,
    // so truncating at n*d+1 loses nothing. Pure-rational constant terms
    // need no truncation at all.
    int y_order = factor.y_order();
    if (!c0.is_constant()) {
        int d = 0;
        for (int k = 0; k <= n; ++k) d = std::max(d, factor.coeff(k).degree());
        int sufficient = n * d + 1;
        y_order = y_order ? std::min(y_order, sufficient) : sufficient;
    }
    TruncatedSeries work = factor.truncated(n + 1).with_y_order(y_order);

    // Normalize to constant term 1, take the log, and read off g_1..g_n.
    TruncatedSeries unit = c0.is_constant()
                               ? work * YPolynomial(c0.constant_term().inverse())
                               : work * c0.inverse_series(y_order);
    TruncatedSeries logs = unit.log();

    // sum_k g_k p_k, exponentiated in the graded ring truncated at weight n.
    ChernPolynomial exponent;
    for (int k = 1; k <= n; ++k) {
        if (logs.coeff(k).is_zero()) continue;
        exponent += power_sum_in_elementary(k) * logs.coeff(k);
    }
    ChernPolynomial acc(YPolynomial(1)), term(YPolynomial(1));
    for (int j = 1; j <= n; ++j) {
        term = mul_truncated(term, exponent, n, y_order);
        term *= Rational(1, j);
        if (term.is_zero()) break;
        acc += term;
    }

    ChernPolynomial result = acc.component(n);
    result *= c0.pow(n);  // restore the factored-out constant
    result = result.truncated_y(y_order);
    result.set_grade(n);
    return result;
}

}  // namespace chiy
