#include "chiy/brute_force.hpp"
#include "chiy/genus.hpp"
#include "chiy/series.hpp"

#include <doctest.h>

#include <random>

using namespace chiy;

namespace {
TruncatedSeries random_unit_series(std::mt19937_64& rng, int order, bool with_y) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    TruncatedSeries s(order, with_y ? order + 2 : 0);
    YPolynomial c0(1);
    if (with_y) c0 += YPolynomial::monomial(1, Rational(num(rng), den(rng)));
    s.set_coeff(0, c0);
    for (int k = 1; k < order; ++k) {
        YPolynomial c(Rational(num(rng), den(rng)));
        if (with_y) c += YPolynomial::monomial(1, Rational(num(rng), den(rng)));
        s.set_coeff(k, c);
    }
    return s;
}
}  // namespace

TEST_CASE("exp of x") {
    TruncatedSeries x = TruncatedSeries::variable(4);
    TruncatedSeries e = x.exp();
    CHECK(e.coeff(0) == YPolynomial(1));
    CHECK(e.coeff(1) == YPolynomial(1));
    CHECK(e.coeff(2) == YPolynomial(Rational(1, 2)));
    CHECK(e.coeff(3) == YPolynomial(Rational(1, 6)));
}

TEST_CASE("geometric series") {
    TruncatedSeries s = TruncatedSeries::constant(YPolynomial(1), 3) - TruncatedSeries::variable(3);
    TruncatedSeries inv = s.inverse();
    for (int k = 0; k < 3; ++k) CHECK(inv.coeff(k) == YPolynomial(1));
}

TEST_CASE("log of (1-e^-x)/x recovers the todd-type factor") {
    // exact oracle: literal coefficient-by-coefficient division of 1 by u
    const int order = 8;
    TruncatedSeries tail = exp_neg_x(order + 1);
    TruncatedSeries u(order);
    for (int k = 0; k < order; ++k) u.set_coeff(k, -tail.coeff(k + 1));

    TruncatedSeries recovered = (-u.log()).exp();  // x/(1-e^-x)
    std::vector<YPolynomial> oracle = oracle::divide_one_by(u.coefficients());
    for (int k = 0; k < order; ++k) CHECK(recovered.coeff(k) == oracle[static_cast<size_t>(k)]);

    CHECK(recovered.coeff(0) == YPolynomial(1));
    CHECK(recovered.coeff(1) == YPolynomial(Rational(1, 2)));
    CHECK(recovered.coeff(2) == YPolynomial(Rational(1, 12)));
    CHECK(recovered.coeff(3) == YPolynomial(0));
}

TEST_CASE("series preconditions") {
    TruncatedSeries x = TruncatedSeries::variable(4);
    CHECK_THROWS_AS(x.inverse(), std::domain_error);  // zero constant term
    CHECK_THROWS_AS((x + TruncatedSeries::constant(YPolynomial(2), 4)).log(), std::domain_error);
    CHECK_THROWS_AS((x + TruncatedSeries::constant(YPolynomial(1), 4)).exp(), std::domain_error);
    // y-valued constant terms need the coefficient mode
    TruncatedSeries bare(4);
    bare.set_coeff(0, YPolynomial(1) + YPolynomial::variable());
    CHECK_THROWS_AS(bare.log(), std::domain_error);
    CHECK_NOTHROW(bare.with_y_order(6).log());
}

TEST_CASE("arithmetic carries the minimum order") {
    TruncatedSeries a = TruncatedSeries::variable(6);
    TruncatedSeries b = TruncatedSeries::constant(YPolynomial(1), 4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
}

TEST_CASE("series round trips") {
    std::mt19937_64 rng(7);
    for (int order : {3, 7, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            TruncatedSeries u = random_unit_series(rng, order, false);
            CHECK(u.log().exp() == u);
            CHECK(u.inverse().inverse() == u);
        }
    }
    // coefficient-mode round trips (constant terms containing y)
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries u = random_unit_series(rng, 6, true);
        CHECK(u.log().exp() == u);
        CHECK(u.inverse().inverse() == u);
        CHECK(u * u.inverse() == TruncatedSeries::constant(YPolynomial(1), 6, u.y_order()));
    }
}
