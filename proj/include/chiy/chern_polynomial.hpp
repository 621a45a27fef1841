// Partition-indexed sparse polynomials: formal combinations of Chern
// monomials c_I with y-polynomial coefficients.
#pragma once

#include "chiy/partition.hpp"
#include "chiy/ypolynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chiy {

/// Formal linear combination of Chern monomials c_I over YPolynomial
/// coefficients. No zero terms are stored. `grade`, when set, is the common
/// weight of every partition key (a homogeneous element).
class ChernPolynomial {
public:
    ChernPolynomial() = default;
    explicit ChernPolynomial(const YPolynomial& constant);
    static ChernPolynomial monomial(const Partition& index, const YPolynomial& coeff = YPolynomial(1));
    /// The single Chern class c_i.
    static ChernPolynomial chern_class(int i) { return monomial(Partition{i}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, YPolynomial>& terms() const { return terms_; }
    YPolynomial coeff(const Partition& index) const;
    std::optional<int> grade() const { return grade_; }
    ChernPolynomial& set_grade(int grade);
    ChernPolynomial& clear_grade();

    ChernPolynomial& operator+=(const ChernPolynomial& o);
    ChernPolynomial& operator-=(const ChernPolynomial& o);
    ChernPolynomial& operator*=(const ChernPolynomial& o);
    ChernPolynomial& operator*=(const YPolynomial& s);
    ChernPolynomial& operator*=(const Rational& s);
    ChernPolynomial operator-() const;

    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const ChernPolynomial& b) { return a *= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const YPolynomial& s) { return a *= s; }
    friend ChernPolynomial operator*(ChernPolynomial a, const Rational& s) { return a *= s; }

    bool operator==(const ChernPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const ChernPolynomial& o) const { return terms_ != o.terms_; }

    /// Drops terms of weight > max_weight.
    ChernPolynomial truncated_weight(int max_weight) const;
    /// The homogeneous piece of the given weight, with grade set.
    ChernPolynomial component(int weight) const;
    /// Reduces every coefficient modulo y^y_order (0 = no-op).
    ChernPolynomial truncated_y(int y_order) const;
    /// Applies fn to every coefficient, dropping resulting zeros.
    ChernPolynomial transformed(const std::function<YPolynomial(const YPolynomial&)>& fn) const;

    /// Substitutes concrete values for the elementary symmetric polynomials:
    /// a part p evaluates to e[p-1] (0 beyond the supplied tuple).
    YPolynomial evaluate_elementary(const std::vector<Rational>& e) const;

    /// "(7/6)*c4 + (1/12)*c1*c3"; coefficients with y are parenthesized.
    std::string str() const;

    /// a*b keeping only weights <= max_weight, coefficients reduced modulo
    /// y^y_order (0 = exact). The workhorse of the graded exponential.
    friend ChernPolynomial mul_truncated(const ChernPolynomial& a, const ChernPolynomial& b,
                                         int max_weight, int y_order);

private:
    std::map<Partition, YPolynomial> terms_;
    std::optional<int> grade_;

    void add_term(const Partition& index, const YPolynomial& value);
};

}  // namespace chiy
