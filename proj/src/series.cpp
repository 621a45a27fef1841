#include "chiy/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace chiy {

TruncatedSeries::TruncatedSeries(int order, int y_order) : y_order_(y_order) {
    if (order <= 0) throw std::invalid_argument("TruncatedSeries: order must be positive");
    if (y_order < 0) throw std::invalid_argument("TruncatedSeries: negative y_order");
    c_.assign(static_cast<size_t>(order), YPolynomial());
}

TruncatedSeries TruncatedSeries::constant(const YPolynomial& c, int order, int y_order) {
    TruncatedSeries s(order, y_order);
    s.c_[0] = s.reduce(c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(int order, int y_order) {
    TruncatedSeries s(order, y_order);
    if (order > 1) s.c_[1] = YPolynomial(1);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(std::vector<YPolynomial> coeffs, int y_order) {
    TruncatedSeries s(static_cast<int>(coeffs.size()), y_order);
    for (size_t k = 0; k < coeffs.size(); ++k) s.c_[k] = s.reduce(coeffs[k]);
    return s;
}

void TruncatedSeries::set_coeff(int k, const YPolynomial& value) {
    c_.at(static_cast<size_t>(k)) = reduce(value);
}

int TruncatedSeries::combine_y_order(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("truncated: cannot raise the order");
    TruncatedSeries s(order, y_order_);
    std::copy(c_.begin(), c_.begin() + order, s.c_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::with_y_order(int y_order) const {
    TruncatedSeries s(order(), y_order);
    for (int k = 0; k < order(); ++k) s.c_[static_cast<size_t>(k)] = s.reduce(c_[static_cast<size_t>(k)]);
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    int n = std::min(order(), o.order());
    TruncatedSeries r(n, combine_y_order(y_order_, o.y_order_));
    for (int k = 0; k < n; ++k)
        r.c_[static_cast<size_t>(k)] = r.reduce(c_[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)]);
    *this = std::move(r);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    int n = std::min(order(), o.order());
    TruncatedSeries r(n, combine_y_order(y_order_, o.y_order_));
    for (int k = 0; k < n; ++k)
        r.c_[static_cast<size_t>(k)] = r.reduce(c_[static_cast<size_t>(k)] - o.c_[static_cast<size_t>(k)]);
    *this = std::move(r);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n, TruncatedSeries::combine_y_order(a.y_order_, b.y_order_));
    for (int i = 0; i < n; ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j + i < n; ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    for (auto& coeff : r.c_) coeff = r.reduce(coeff);
    return r;
}

TruncatedSeries operator*(TruncatedSeries a, const YPolynomial& s) {
    for (auto& coeff : a.c_) coeff = a.reduce(coeff * s);
    return a;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& coeff : r.c_) coeff = -coeff;
    return r;
}

TruncatedSeries TruncatedSeries::positive_part() const {
    TruncatedSeries r = *this;
    r.c_[0] = YPolynomial();
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const YPolynomial& c0 = c_[0];
    YPolynomial c0_inv;
    if (c0.is_constant()) {
        if (c0.is_zero()) throw std::domain_error("invert-unit: constant term is not invertible");
        c0_inv = YPolynomial(c0.constant_term().inverse());
    } else {
        if (y_order_ == 0 || c0.constant_term().is_zero())
            throw std::domain_error("invert-unit: constant term is not invertible");
        c0_inv = c0.inverse_series(y_order_);
    }
    // S = c0(1 + T), 1/S = (1/c0) sum (-T)^k; T has positive valuation.
    TruncatedSeries t = positive_part() * c0_inv;
    TruncatedSeries acc = constant(YPolynomial(1), order(), y_order_);
    TruncatedSeries term = acc;
    for (int k = 1; k < order(); ++k) {
        term = -(term * t);
        acc += term;
    }
    return acc * c0_inv;
}

TruncatedSeries TruncatedSeries::log() const {
    const YPolynomial& c0 = c_[0];
    if (c0.constant_term() != Rational(1))
        throw std::domain_error("log-unit: constant term is not a unit with rational part 1");
    YPolynomial head;  // log of the constant term
    TruncatedSeries t(order(), y_order_);
    if (c0.is_constant()) {
        t = positive_part();
    } else {
        if (y_order_ == 0)
            throw std::domain_error("log-unit: y-valued constant term requires coefficient mode");
        head = c0.log_series(y_order_);
        t = positive_part() * c0.inverse_series(y_order_);
    }
    TruncatedSeries acc = constant(head, order(), y_order_);
    TruncatedSeries upow = constant(YPolynomial(1), order(), y_order_);
    for (int k = 1; k < order(); ++k) {
        upow = upow * t;
        acc += upow * YPolynomial(Rational((k % 2) ? 1 : -1, k));
    }
    return acc;
}

TruncatedSeries TruncatedSeries::exp() const {
    const YPolynomial& c0 = c_[0];
    if (!c0.constant_term().is_zero())
        throw std::domain_error("exp: constant term must vanish");
    YPolynomial head(1);  // exp of the constant term
    if (!c0.is_zero()) {
        if (y_order_ == 0)
            throw std::domain_error("exp: y-valued constant term requires coefficient mode");
        head = c0.exp_series(y_order_);
    }
    TruncatedSeries t = positive_part();
    TruncatedSeries acc = constant(YPolynomial(1), order(), y_order_);
    TruncatedSeries term = acc;
    for (int k = 1; k < order(); ++k) {
        term = term * t;
        term = term * YPolynomial(Rational(1, k));
        acc += term;
    }
    return acc * head;
}

}  // namespace chiy
