#include "chiy/genus.hpp"

#include "chiy/symmetric.hpp"

#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace chiy {

ChernNumbers::ChernNumbers(int dimension) : dimension_(dimension) {
    if (dimension < 0) throw std::invalid_argument("ChernNumbers: negative dimension");
}

long long ChernNumbers::value(const Partition& index) const {
    auto it = values_.find(index);
    return it == values_.end() ? 0 : it->second;
}

void ChernNumbers::set(const Partition& index, long long value) {
    if (index.weight() != dimension_)
        throw std::invalid_argument("ChernNumbers: partition weight " +
                                    std::to_string(index.weight()) + " != dimension " +
                                    std::to_string(dimension_));
    values_[index] = value;
}

TruncatedSeries exp_neg_x(int order) {
    TruncatedSeries s(order);
    Rational c(1);
    for (int k = 0; k < order; ++k) {
        s.set_coeff(k, YPolynomial(c));
        c /= Rational(-(k + 1));
    }
    return s;
}

TruncatedSeries hrr_factor(int order) {
    if (order <= 0) throw std::invalid_argument("hrr_factor: order must be positive");
    // (1 - e^-x)/x has coefficients (-1)^k/(k+1)!: read them off 1 - e^-x.
    TruncatedSeries tail = exp_neg_x(order + 1);
    TruncatedSeries divisor(order);
    for (int k = 0; k < order; ++k) divisor.set_coeff(k, -tail.coeff(k + 1));
    TruncatedSeries numerator =
        TruncatedSeries::constant(YPolynomial(1), order) + exp_neg_x(order) * YPolynomial::variable();
    return numerator * divisor.inverse();
}

ChernPolynomial hrr_genus_formula(int n) {
    if (n < 0) throw std::invalid_argument("hrr_genus_formula: negative dimension");
    if (n == 0) return ChernPolynomial(YPolynomial(1));
    static std::mutex mutex;
    static std::map<int, ChernPolynomial> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // synthesized outside the lock so distinct dimensions can run in parallel;
    // a racing recomputation lands on the same value
    ChernPolynomial formula = genus_expand(hrr_factor(n + 1), n);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(formula)).first->second;
}

YPolynomial evaluate_genus(const ChernPolynomial& formula, const ChernNumbers& chern) {
    if (!formula.grade() || *formula.grade() != chern.dimension())
        throw std::invalid_argument("evaluate_genus: formula grade does not match Chern dimension");
    YPolynomial acc;
    for (const auto& [index, coeff] : formula.terms())
        acc += coeff * Rational(chern.value(index));
    return acc;
}

TaylorCoefficients taylor_at_minus_one(int n, int depth) {
    if (depth < 0 || depth > n) throw std::invalid_argument("taylor_at_minus_one: depth out of range");
    ChernPolynomial formula = hrr_genus_formula(n);
    TaylorCoefficients out;
    out.dimension = n;
    out.a.assign(static_cast<size_t>(depth) + 1, ChernPolynomial());
    for (const auto& [index, coeff] : formula.terms()) {
        YPolynomial recentred = coeff.shifted(Rational(-1));  // coefficient of u^i, u = 1+y
        for (int i = 0; i <= depth; ++i) {
            Rational a_i = recentred.coeff(i);
            if (!a_i.is_zero())
                out.a[static_cast<size_t>(i)] += ChernPolynomial::monomial(index, YPolynomial(a_i));
        }
    }
    for (auto& a_i : out.a) a_i.set_grade(n);
    return out;
}

mpz_class stirling2(int m, int i) {
    if (m < 0 || i < 0) throw std::invalid_argument("stirling2: negative argument");
    if (i > m) return 0;
    std::vector<mpz_class> row(static_cast<size_t>(m) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int r = 1; r <= m; ++r) {
        for (int c = std::min(r, m); c >= 1; --c) row[static_cast<size_t>(c)] = c * row[static_cast<size_t>(c)] + row[static_cast<size_t>(c - 1)];
        row[0] = 0;
    }
    return row[static_cast<size_t>(i)];
}

PowerMoments chern_power_moments(int n, int depth) {
    if (depth < 0 || depth > n) throw std::invalid_argument("chern_power_moments: depth out of range");
    TaylorCoefficients taylor = taylor_at_minus_one(n, depth);
    PowerMoments out;
    out.dimension = n;
    out.h.reserve(static_cast<size_t>(depth) + 1);
    for (int m = 0; m <= depth; ++m) {
        ChernPolynomial moment;
        for (int i = 0; i <= m; ++i) {
            Rational factor =
                Rational(mpz_class(stirling2(m, i) * factorial(static_cast<unsigned long>(i))));
            if (i % 2) factor = -factor;
            if (factor.is_zero()) continue;
            moment += taylor.a[static_cast<size_t>(i)] * factor;
        }
        moment.set_grade(n);
        out.h.push_back(std::move(moment));
    }
    return out;
}

ChernPolynomial duality_residual(int n) {
    if (n < 0) throw std::invalid_argument("duality_residual: negative dimension");
    ChernPolynomial formula = hrr_genus_formula(n);
    int sign = (n % 2) ? -1 : 1;
    // chi_y - (-y)^n chi_{1/y}, multiplied through by y^n to stay polynomial.
    return formula.transformed([n, sign](const YPolynomial& p) {
        return p - p.reversed(n) * Rational(sign);
    });
}

std::vector<Rational> odd_moment_reduction(int n, int i) {
    if (i < 0 || 2 * i + 1 > n) throw std::invalid_argument("odd_moment_reduction: 2i+1 must be <= n");
    PowerMoments moments = chern_power_moments(n, 2 * i + 1);
    const ChernPolynomial& target = moments.h.back();
    std::vector<const ChernPolynomial*> basis;
    for (int j = 0; j <= i; ++j) basis.push_back(&moments.h[static_cast<size_t>(2 * j)]);

    std::set<Partition> support;
    for (const auto* poly : basis)
        for (const auto& [index, coeff] : poly->terms()) support.insert(index);
    for (const auto& [index, coeff] : target.terms()) support.insert(index);

    // One equation per Chern monomial; unknowns alpha_0..alpha_i. The moment
    // coefficients are pure rationals, so solve by exact Gaussian elimination.
    size_t cols = basis.size();
    std::vector<std::vector<Rational>> rows;
    for (const Partition& index : support) {
        std::vector<Rational> row;
        row.reserve(cols + 1);
        for (const auto* poly : basis) row.push_back(poly->coeff(index).constant_term());
        row.push_back(target.coeff(index).constant_term());
        rows.push_back(std::move(row));
    }

    size_t pivot_row = 0;
    std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = SIZE_MAX;
        for (size_t r = pivot_row; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = rows[pivot_row][col].inverse();
        for (auto& v : rows[pivot_row]) v *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (size_t c = 0; c <= cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
    }
    for (size_t r = pivot_row; r < rows.size(); ++r) {
        if (!rows[r][cols].is_zero())
            throw std::runtime_error("odd_moment_reduction: no exact combination exists");
    }
    std::vector<Rational> alpha(cols, Rational(0));
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) alpha[col] = rows[pivot_of_col[col]][cols];
    }
    return alpha;
}

}  // namespace chiy
