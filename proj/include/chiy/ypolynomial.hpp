// Sparse polynomials in the formal variable y over exact rationals.
#pragma once

#include "chiy/rational.hpp"

#include <map>
#include <string>

namespace chiy {

/// Polynomial in y with Rational coefficients; zero coefficients are never
/// stored. Also provides the truncated-power-series views (inverse, log, exp
/// modulo y^order) needed when y-polynomials act as series coefficients.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const Rational& constant);  // NOLINT: implicit by design
    YPolynomial(int constant) : YPolynomial(Rational(constant)) {}
    YPolynomial(long constant) : YPolynomial(Rational(constant)) {}

    static YPolynomial variable() { return monomial(1, 1); }
    static YPolynomial monomial(int exponent, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.empty() || c_.rbegin()->first == 0; }
    /// Degree of the zero polynomial is -1.
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    Rational coeff(int exponent) const;
    Rational constant_term() const { return coeff(0); }
    const std::map<int, Rational>& coefficients() const { return c_; }

    YPolynomial& operator+=(const YPolynomial& o);
    YPolynomial& operator-=(const YPolynomial& o);
    YPolynomial& operator*=(const YPolynomial& o);
    YPolynomial& operator*=(const Rational& s);
    YPolynomial& operator/=(const Rational& s);
    YPolynomial operator-() const;

    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(YPolynomial a, const YPolynomial& b) { return a *= b; }
    friend YPolynomial operator*(YPolynomial a, const Rational& s) { return a *= s; }
    friend YPolynomial operator*(const Rational& s, YPolynomial a) { return a *= s; }

    bool operator==(const YPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const YPolynomial& o) const { return c_ != o.c_; }

    YPolynomial pow(int e) const;

    /// Drops all terms of exponent >= order; order <= 0 means no truncation.
    YPolynomial truncated(int order) const;
    /// Power-series inverse modulo y^order; constant term must be nonzero.
    YPolynomial inverse_series(int order) const;
    /// Power-series log modulo y^order; constant term must be exactly 1.
    YPolynomial log_series(int order) const;
    /// Power-series exp modulo y^order; constant term must be zero.
    YPolynomial exp_series(int order) const;

    Rational evaluate(const Rational& y) const;
    /// this(inner(y)).
    YPolynomial compose(const YPolynomial& inner) const;
    /// p(y + c): re-expansion around -c.
    YPolynomial shifted(const Rational& c) const;
    /// y^n * p(1/y); requires degree() <= n.
    YPolynomial reversed(int n) const;

    /// "1/12 - 5/6*y + 1/12*y^2" with ascending exponents; "0" when zero.
    std::string str() const;

    /// a*b dropping exponents >= order as they arise (order <= 0: plain product).
    friend YPolynomial mul_truncated(const YPolynomial& a, const YPolynomial& b, int order);

private:
    std::map<int, Rational> c_;

    void add_term(int exponent, const Rational& value);
};

}  // namespace chiy
