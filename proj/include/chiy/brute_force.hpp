// Independent reference computations used to cross-check the genus pipeline:
// direct multivariate expansion over explicit symbolic variables, literal
// series division, and projective-space Chern numbers. Nothing here calls the
// series/symmetric-function machinery it is used to verify.
#pragma once

#include "chiy/chern_polynomial.hpp"
#include "chiy/genus.hpp"
#include "chiy/ypolynomial.hpp"

#include <map>
#include <vector>

namespace chiy::oracle {

/// Multivariate polynomial in x_1..x_m with YPolynomial coefficients; the
/// exponent vector has one slot per variable. Only what the checks need.
class MultiPoly {
public:
    explicit MultiPoly(int variables);
    static MultiPoly constant(int variables, const YPolynomial& c);

    int variables() const { return variables_; }
    const std::map<std::vector<int>, YPolynomial>& terms() const { return terms_; }
    void add_term(std::vector<int> exponents, const YPolynomial& coeff);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    /// Product truncated at total degree <= max_total_degree.
    MultiPoly multiplied(const MultiPoly& o, int max_total_degree) const;
    /// Terms of total degree exactly d.
    MultiPoly homogeneous_part(int d) const;
    bool is_zero() const { return terms_.empty(); }

private:
    int variables_ = 0;
    std::map<std::vector<int>, YPolynomial> terms_;
};

/// The j-th elementary symmetric polynomial of x_1..x_m, expanded literally.
MultiPoly elementary_symmetric(int m, int j);

/// Rewrites a symmetric polynomial, homogeneous of degree n in n variables,
/// as a combination of Chern monomials by leading-term elimination. Throws if
/// the input is not symmetric.
ChernPolynomial symmetric_to_chern(const MultiPoly& poly, int n);

/// Weight-n part of factor(x_1)...factor(x_n) by direct expansion; `factor`
/// lists the series coefficients (index = power of x, length >= n+1).
ChernPolynomial expand_product_direct(const std::vector<YPolynomial>& factor, int n);

/// Solves u * w = 1 coefficient by coefficient (literal series division);
/// u[0] must be a nonzero rational constant.
std::vector<YPolynomial> divide_one_by(const std::vector<YPolynomial>& u);

/// Chern numbers of n-dimensional complex projective space: the total Chern
/// class (1+h)^{n+1} is expanded by repeated truncated multiplication and
/// c_I integrates to the product of the c_{i_j} coefficients.
ChernNumbers projective_space_chern(int n);

}  // namespace chiy::oracle
