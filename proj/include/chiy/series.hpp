// Truncated power series in a formal variable x with YPolynomial coefficients.
#pragma once

#include "chiy/ypolynomial.hpp"

#include <vector>

namespace chiy {

/// Power series in x truncated at a fixed order (exclusive): exactly `order`
/// stored coefficients. Binary operations carry the minimum order of the
/// operands. An optional coefficient mode (`y_order` > 0) reduces all
/// coefficient arithmetic modulo y^y_order, which is what makes unit constant
/// terms containing y (such as 1+y) invertible; y_order == 0 keeps
/// coefficients exact.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, int y_order = 0);
    static TruncatedSeries constant(const YPolynomial& c, int order, int y_order = 0);
    static TruncatedSeries variable(int order, int y_order = 0);
    static TruncatedSeries from_coefficients(std::vector<YPolynomial> coeffs, int y_order = 0);

    int order() const { return static_cast<int>(c_.size()); }
    int y_order() const { return y_order_; }
    const YPolynomial& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    const std::vector<YPolynomial>& coefficients() const { return c_; }
    void set_coeff(int k, const YPolynomial& value);

    TruncatedSeries truncated(int order) const;
    TruncatedSeries with_y_order(int y_order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const YPolynomial& s);
    TruncatedSeries operator-() const;

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    /// Multiplicative inverse. The constant term must be invertible: a nonzero
    /// rational, or in coefficient mode a y-polynomial with nonzero constant
    /// rational part.
    TruncatedSeries inverse() const;
    /// Logarithm of a unit. The constant term must have constant rational part
    /// exactly 1 (any y-part requires coefficient mode).
    TruncatedSeries log() const;
    /// Exponential. The constant term must have zero constant rational part
    /// (a pure-y part requires coefficient mode).
    TruncatedSeries exp() const;

private:
    std::vector<YPolynomial> c_;
    int y_order_ = 0;

    YPolynomial reduce(const YPolynomial& p) const { return p.truncated(y_order_); }
    static int combine_y_order(int a, int b);
    /// Splits off the constant term; returns the positive-valuation remainder.
    TruncatedSeries positive_part() const;
};

}  // namespace chiy
