// The chi_y-genus as a polynomial in Chern numbers: formula synthesis for any
// dimension, Taylor re-expansion at y = -1, modified power moments, duality
// residual, and evaluation on concrete Chern numbers.
#pragma once

#include "chiy/chern_polynomial.hpp"
#include "chiy/series.hpp"

#include <map>
#include <vector>

namespace chiy {

/// Chern numbers of a fixed complex dimension n: partitions of n -> integers.
/// Missing keys read as 0.
class ChernNumbers {
public:
    explicit ChernNumbers(int dimension);

    int dimension() const { return dimension_; }
    long long value(const Partition& index) const;
    /// Rejects keys whose weight differs from the dimension.
    void set(const Partition& index, long long value);
    const std::map<Partition, long long>& values() const { return values_; }

    bool operator==(const ChernNumbers& o) const {
        return dimension_ == o.dimension_ && values_ == o.values_;
    }

private:
    int dimension_ = 0;
    std::map<Partition, long long> values_;
};

/// a_0..a_k of the expansion chi_y = sum a_i (1+y)^i; each a_i is a grade-n
/// ChernPolynomial with pure rational coefficients.
struct TaylorCoefficients {
    int dimension = 0;
    std::vector<ChernPolynomial> a;
};

/// h(p^0)..h(p^k); h(p^0) = c_n exactly.
struct PowerMoments {
    int dimension = 0;
    std::vector<ChernPolynomial> h;
};

/// The one-variable factor x(1 + y e^-x)/(1 - e^-x), built from the truncated
/// exponential series and series division (no transcribed constants).
TruncatedSeries hrr_factor(int order);

/// sum_{k<order} (-x)^k / k!.
TruncatedSeries exp_neg_x(int order);

/// chi_y of an n-fold as a grade-n ChernPolynomial; y-degrees stay <= n.
/// n = 0 gives the constant 1.
ChernPolynomial hrr_genus_formula(int n);

/// Pairs a grade-n formula with Chern-number values; exact.
YPolynomial evaluate_genus(const ChernPolynomial& formula, const ChernNumbers& chern);

/// Exact re-expansion of the dimension-n formula in powers of (1+y), to depth
/// k <= n.
TaylorCoefficients taylor_at_minus_one(int n, int depth);

/// Modified moments h(p^m) = sum_{i<=m} S(m,i) i! (-1)^i a_i, m = 0..depth.
PowerMoments chern_power_moments(int n, int depth);

/// chi_y - (-y)^n chi_{1/y}, cleared of denominators by y^n; identically zero.
ChernPolynomial duality_residual(int n);

/// Stirling number of the second kind S(m, i).
mpz_class stirling2(int m, int i);

/// Writes h(p^{2i+1}) as an exact combination of h(p^{2j}), j <= i, by exact
/// linear solve over the Chern-monomial basis; returns the coefficients
/// alpha_0..alpha_i (alpha_i multiplies h(p^{2i})). Throws if no combination
/// exists.
std::vector<Rational> odd_moment_reduction(int n, int i);

}  // namespace chiy
