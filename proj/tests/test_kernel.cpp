#include "chiy/partition.hpp"
#include "chiy/rational.hpp"
#include "chiy/ypolynomial.hpp"

#include <doctest.h>

#include <random>

using namespace chiy;

TEST_CASE("rationals stay canonical") {
    Rational r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    Rational s(1, -2);
    CHECK(s.numerator() == -1);
    CHECK(s.denominator() == 2);
    CHECK((r + s) == Rational(1));
    CHECK((r * s) == Rational(-3, 4));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7, 7) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(3).inverse() / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing and rendering") {
    CHECK(Rational::parse("-5/10") == Rational(-1, 2));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational(1, 5760).str() == "1/5760");
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("partition canonical form and ordering") {
    Partition p({1, 3, 1});
    CHECK(p.parts() == std::vector<int>{3, 1, 1});
    CHECK(p.weight() == 5);
    CHECK(p.key() == "3,1,1");
    CHECK(p.monomial() == "c1^2*c3");
    CHECK(Partition().monomial() == "1");
    CHECK(Partition::parse("3,1,1") == p);
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);

    // graded order, largest part first inside a grade
    CHECK(Partition{4} < Partition{3, 1});
    CHECK(Partition{3, 1} < Partition{2, 2});
    CHECK(Partition{2, 2} < Partition{2, 1, 1});
    CHECK(Partition{3} < Partition{4});
    CHECK(Partition{2, 1}.merged(Partition{3, 1}) == Partition({3, 2, 1, 1}));

    auto all5 = partitions_of(5);
    CHECK(all5.size() == 7);
    CHECK(all5.front() == Partition{5});
    CHECK(all5.back() == Partition({1, 1, 1, 1, 1}));
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
}

TEST_CASE("y-polynomial arithmetic") {
    YPolynomial y = YPolynomial::variable();
    YPolynomial p = (y + YPolynomial(1)) * (y - YPolynomial(1));
    CHECK(p == YPolynomial::monomial(2, 1) - YPolynomial(1));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1).is_zero());
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.evaluate(Rational(3)) == Rational(8));
    CHECK(p.pow(0) == YPolynomial(1));
    CHECK(p.pow(2) == p * p);
    CHECK((-p) == p * Rational(-1));
    CHECK(p.str() == "-1 + y^2");
    CHECK((YPolynomial(2) - y * Rational(20) ).str() == "2 - 20*y");
}

TEST_CASE("y-polynomial shift, reverse, compose") {
    YPolynomial y = YPolynomial::variable();
    // chi_y of the projective plane
    YPolynomial p = YPolynomial(1) - y + y.pow(2);
    YPolynomial shifted = p.shifted(Rational(-1));  // coefficients in u = 1+y
    CHECK(shifted == YPolynomial(3) - YPolynomial::monomial(1, 3) + YPolynomial::monomial(2, 1));

    CHECK(p.reversed(2) == p);  // palindromic
    CHECK((YPolynomial(2) - y).reversed(1) == (YPolynomial(-1) + y * Rational(2)));
    CHECK_THROWS_AS(p.reversed(1), std::invalid_argument);

    CHECK(p.compose(YPolynomial::monomial(2, -1)) ==
          YPolynomial(1) + YPolynomial::monomial(2, 1) + YPolynomial::monomial(4, 1));
}

TEST_CASE("y-polynomial series helpers") {
    YPolynomial y = YPolynomial::variable();
    YPolynomial unit = YPolynomial(1) + y;
    YPolynomial inv = unit.inverse_series(5);
    CHECK((unit * inv).truncated(5) == YPolynomial(1));
    CHECK(inv.coeff(4) == Rational(1));
    CHECK(inv.coeff(3) == Rational(-1));
    CHECK_THROWS_AS(y.inverse_series(3), std::domain_error);

    YPolynomial log = unit.log_series(4);  // y - y^2/2 + y^3/3
    CHECK(log.coeff(1) == Rational(1));
    CHECK(log.coeff(2) == Rational(-1, 2));
    CHECK(log.coeff(3) == Rational(1, 3));
    CHECK(log.exp_series(4) == unit);
    CHECK_THROWS_AS(unit.exp_series(4), std::domain_error);
    CHECK_THROWS_AS((y + YPolynomial(2)).log_series(4), std::domain_error);
}

TEST_CASE("y-polynomial round trips on random data") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        YPolynomial p(1);
        for (int k = 1; k < 6; ++k)
            p += YPolynomial::monomial(k, Rational(num(rng), den(rng)));
        CHECK(p.log_series(8).exp_series(8) == p.truncated(8));
        CHECK(p.inverse_series(8).inverse_series(8) == p.truncated(8));
        CHECK((p * p.inverse_series(8)).truncated(8) == YPolynomial(1));
    }
}
