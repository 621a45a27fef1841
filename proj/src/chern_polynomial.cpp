#include "chiy/chern_polynomial.hpp"

#include <stdexcept>

namespace chiy {

ChernPolynomial::ChernPolynomial(const YPolynomial& constant) : grade_(0) {
    if (!constant.is_zero()) terms_[Partition()] = constant;
}

ChernPolynomial ChernPolynomial::monomial(const Partition& index, const YPolynomial& coeff) {
    ChernPolynomial p;
    p.grade_ = index.weight();
    if (!coeff.is_zero()) p.terms_[index] = coeff;
    return p;
}

YPolynomial ChernPolynomial::coeff(const Partition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? YPolynomial() : it->second;
}

ChernPolynomial& ChernPolynomial::set_grade(int grade) {
    for (const auto& [index, coeff] : terms_) {
        if (index.weight() != grade)
            throw std::invalid_argument("ChernPolynomial: term of weight " +
                                        std::to_string(index.weight()) + " under grade " +
                                        std::to_string(grade));
    }
    grade_ = grade;
    return *this;
}

ChernPolynomial& ChernPolynomial::clear_grade() {
    grade_.reset();
    return *this;
}

void ChernPolynomial::add_term(const Partition& index, const YPolynomial& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& o) {
    std::optional<int> grade;
    if (is_zero())
        grade = o.grade_;
    else if (o.is_zero())
        grade = grade_;
    else if (grade_ && o.grade_ && *grade_ == *o.grade_)
        grade = grade_;
    for (const auto& [index, coeff] : o.terms_) add_term(index, coeff);
    grade_ = grade;
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& o) {
    std::optional<int> grade;
    if (is_zero())
        grade = o.grade_;
    else if (o.is_zero())
        grade = grade_;
    else if (grade_ && o.grade_ && *grade_ == *o.grade_)
        grade = grade_;
    for (const auto& [index, coeff] : o.terms_) add_term(index, -coeff);
    grade_ = grade;
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const ChernPolynomial& o) {
    ChernPolynomial result;
    if (grade_ && o.grade_) result.grade_ = *grade_ + *o.grade_;
    for (const auto& [ia, va] : terms_)
        for (const auto& [ib, vb] : o.terms_) result.add_term(ia.merged(ib), va * vb);
    *this = std::move(result);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const YPolynomial& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= s;
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= s;
    return *this;
}

ChernPolynomial ChernPolynomial::operator-() const {
    ChernPolynomial r = *this;
    for (auto& [index, coeff] : r.terms_) coeff = -coeff;
    return r;
}

ChernPolynomial ChernPolynomial::truncated_weight(int max_weight) const {
    ChernPolynomial r;
    r.grade_ = grade_;
    for (const auto& [index, coeff] : terms_) {
        if (index.weight() <= max_weight) r.terms_[index] = coeff;
    }
    return r;
}

ChernPolynomial ChernPolynomial::component(int weight) const {
    ChernPolynomial r;
    for (const auto& [index, coeff] : terms_) {
        if (index.weight() == weight) r.terms_[index] = coeff;
    }
    r.grade_ = weight;
    return r;
}

ChernPolynomial ChernPolynomial::truncated_y(int y_order) const {
    if (y_order <= 0) return *this;
    return transformed([y_order](const YPolynomial& p) { return p.truncated(y_order); });
}

ChernPolynomial ChernPolynomial::transformed(
    const std::function<YPolynomial(const YPolynomial&)>& fn) const {
    ChernPolynomial r;
    r.grade_ = grade_;
    for (const auto& [index, coeff] : terms_) {
        YPolynomial mapped = fn(coeff);
        if (!mapped.is_zero()) r.terms_[index] = std::move(mapped);
    }
    return r;
}

YPolynomial ChernPolynomial::evaluate_elementary(const std::vector<Rational>& e) const {
    YPolynomial acc;
    for (const auto& [index, coeff] : terms_) {
        Rational value(1);
        bool vanished = false;
        for (int part : index.parts()) {
            if (part > static_cast<int>(e.size())) {
                vanished = true;
                break;
            }
            value *= e[static_cast<size_t>(part - 1)];
        }
        if (!vanished) acc += coeff * value;
    }
    return acc;
}

ChernPolynomial mul_truncated(const ChernPolynomial& a, const ChernPolynomial& b, int max_weight,
                              int y_order) {
    ChernPolynomial result;
    for (const auto& [ia, va] : a.terms_) {
        for (const auto& [ib, vb] : b.terms_) {
            if (ia.weight() + ib.weight() > max_weight) continue;
            result.add_term(ia.merged(ib), mul_truncated(va, vb, y_order));
        }
    }
    return result;
}

std::string ChernPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [index, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + coeff.str() + ")";
        if (!index.empty()) out += "*" + index.monomial();
    }
    return out;
}

}  // namespace chiy
