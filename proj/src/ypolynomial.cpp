#include "chiy/ypolynomial.hpp"

#include <stdexcept>

namespace chiy {

YPolynomial::YPolynomial(const Rational& constant) {
    if (!constant.is_zero()) c_[0] = constant;
}

YPolynomial YPolynomial::monomial(int exponent, const Rational& coeff) {
    if (exponent < 0) throw std::invalid_argument("YPolynomial: negative exponent");
    YPolynomial p;
    if (!coeff.is_zero()) p.c_[exponent] = coeff;
    return p;
}

Rational YPolynomial::coeff(int exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Rational(0) : it->second;
}

void YPolynomial::add_term(int exponent, const Rational& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = c_.emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) c_.erase(it);
    }
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

YPolynomial& YPolynomial::operator*=(const YPolynomial& o) {
    YPolynomial result;
    for (const auto& [ea, va] : c_)
        for (const auto& [eb, vb] : o.c_) result.add_term(ea + eb, va * vb);
    *this = std::move(result);
    return *this;
}

YPolynomial& YPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [e, v] : c_) v *= s;
    return *this;
}

YPolynomial& YPolynomial::operator/=(const Rational& s) { return *this *= s.inverse(); }

YPolynomial YPolynomial::operator-() const {
    YPolynomial r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

YPolynomial YPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("YPolynomial: negative power");
    YPolynomial result(1);
    YPolynomial base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

YPolynomial YPolynomial::truncated(int order) const {
    if (order <= 0) return *this;
    YPolynomial r;
    for (const auto& [e, v] : c_) {
        if (e < order) r.c_[e] = v;
    }
    return r;
}

YPolynomial YPolynomial::inverse_series(int order) const {
    if (order <= 0) throw std::invalid_argument("inverse_series: order must be positive");
    Rational c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("inverse_series: constant term is zero");
    // 1/(c0(1+u)) = (1/c0) sum (-u)^k with u = p/c0 - 1 of valuation >= 1.
    YPolynomial u = (*this * c0.inverse()).truncated(order) - YPolynomial(1);
    YPolynomial acc(1), term(1);
    for (int k = 1; k < order && !term.is_zero(); ++k) {
        term = (term * u).truncated(order);
        term *= Rational(-1);
        acc += term;
    }
    return (acc * c0.inverse()).truncated(order);
}

YPolynomial YPolynomial::log_series(int order) const {
    if (order <= 0) throw std::invalid_argument("log_series: order must be positive");
    if (constant_term() != Rational(1))
        throw std::domain_error("log_series: constant term must be 1");
    YPolynomial u = truncated(order) - YPolynomial(1);
    YPolynomial acc, upow(1);
    for (int k = 1; k < order; ++k) {
        upow = (upow * u).truncated(order);
        if (upow.is_zero()) break;
        acc += upow * Rational((k % 2) ? 1 : -1, k);
    }
    return acc;
}

YPolynomial YPolynomial::exp_series(int order) const {
    if (order <= 0) throw std::invalid_argument("exp_series: order must be positive");
    if (!constant_term().is_zero())
        throw std::domain_error("exp_series: constant term must be zero");
    YPolynomial acc(1), term(1);
    for (int k = 1; k < order; ++k) {
        term = (term * *this).truncated(order);
        term /= Rational(k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

Rational YPolynomial::evaluate(const Rational& y) const {
    // Horner over the sparse exponent ladder.
    Rational acc(0);
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) acc *= y.pow(prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= y.pow(prev);
    return acc;
}

YPolynomial YPolynomial::compose(const YPolynomial& inner) const {
    YPolynomial acc;
    int prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0) acc *= inner.pow(prev - it->first);
        acc += YPolynomial(it->second);
        prev = it->first;
    }
    if (prev > 0) acc *= inner.pow(prev);
    return acc;
}

YPolynomial YPolynomial::shifted(const Rational& c) const {
    return compose(YPolynomial::variable() + YPolynomial(c));
}

YPolynomial YPolynomial::reversed(int n) const {
    if (degree() > n) throw std::invalid_argument("reversed: degree exceeds n");
    YPolynomial r;
    for (const auto& [e, v] : c_) r.c_[n - e] = v;
    return r;
}

YPolynomial mul_truncated(const YPolynomial& a, const YPolynomial& b, int order) {
    if (order <= 0) return a * b;
    YPolynomial result;
    for (const auto& [ea, va] : a.c_) {
        if (ea >= order) break;
        for (const auto& [eb, vb] : b.c_) {
            if (ea + eb >= order) break;
            result.add_term(ea + eb, va * vb);
        }
    }
    return result;
}

std::string YPolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [e, v] : c_) {
        Rational a = v;
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        bool unit = (a == Rational(1));
        if (e == 0) {
            out += a.str();
        } else {
            if (!unit) out += a.str() + "*";
            out += "y";
            if (e > 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace chiy
