// Symmetric-function conversions: power sums in elementary symmetric
// monomials (Newton's identities) and the multiplicative-genus expansion.
#pragma once

#include "chiy/chern_polynomial.hpp"
#include "chiy/series.hpp"

namespace chiy {

/// The k-th power sum p_k written in elementary symmetric (Chern) monomials
/// via Newton's identities; grade k, integer coefficients. Memoized and safe
/// for concurrent callers.
ChernPolynomial power_sum_in_elementary(int k);

/// Weight-n component of the n-fold product factor(x_1)...factor(x_n),
/// expressed in Chern monomials: log the factor, sum the power sums,
/// exponentiate in the graded ring truncated at weight n, convert to
/// elementary symmetric monomials. Requires order >= n+1 and an invertible
/// constant rational part. The result is exact (a y-truncation order
/// sufficient for exactness is derived internally when the constant term
/// contains y).
ChernPolynomial genus_expand(const TruncatedSeries& factor, int n);

}  // namespace chiy
