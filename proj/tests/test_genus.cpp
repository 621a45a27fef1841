#include "chiy/brute_force.hpp"
#include "chiy/genus.hpp"
#include "support.hpp"

#include <doctest.h>

#include <thread>

using namespace chiy;

namespace {
YPolynomial y() { return YPolynomial::variable(); }

ChernPolynomial mono(std::vector<int> parts, const YPolynomial& c) {
    return ChernPolynomial::monomial(Partition(std::move(parts)), c);
}
}  // namespace

TEST_CASE("genus formula in dimension one") {
    CHECK(hrr_genus_formula(1) == mono({1}, (YPolynomial(1) - y()) * Rational(1, 2)));
    CHECK(hrr_genus_formula(0) == ChernPolynomial(YPolynomial(1)));
}

TEST_CASE("genus formula in dimension two: todd and signature specializations") {
    ChernPolynomial formula = hrr_genus_formula(2);
    // constant term at y = 0 is the Todd genus (c1^2 + c2)/12
    CHECK(formula.coeff(Partition{1, 1}).coeff(0) == Rational(1, 12));
    CHECK(formula.coeff(Partition{2}).coeff(0) == Rational(1, 12));
    // at y = 1 the signature (c1^2 - 2 c2)/3
    CHECK(formula.coeff(Partition{1, 1}).evaluate(Rational(1)) == Rational(1, 3));
    CHECK(formula.coeff(Partition{2}).evaluate(Rational(1)) == Rational(-2, 3));
    // reassembles from the a_i: sum a_i (1+y)^i
    TaylorCoefficients taylor = taylor_at_minus_one(2, 2);
    YPolynomial one_plus_y = YPolynomial(1) + y();
    ChernPolynomial reassembled;
    for (size_t i = 0; i < taylor.a.size(); ++i)
        reassembled += taylor.a[i] * one_plus_y.pow(static_cast<int>(i));
    CHECK(reassembled == formula);
}

TEST_CASE("evaluating the genus on chern numbers") {
    ChernNumbers sphere(1);
    sphere.set(Partition{1}, 2);
    CHECK(evaluate_genus(hrr_genus_formula(1), sphere) == YPolynomial(1) - y());

    ChernNumbers plane(2);
    plane.set(Partition{1, 1}, 9);
    plane.set(Partition{2}, 3);
    CHECK(evaluate_genus(hrr_genus_formula(2), plane) ==
          YPolynomial(1) - y() + YPolynomial::monomial(2, 1));

    ChernNumbers zero(2);
    CHECK(evaluate_genus(hrr_genus_formula(2), zero).is_zero());

    CHECK_THROWS_AS(evaluate_genus(hrr_genus_formula(2), sphere), std::invalid_argument);
    CHECK_THROWS_AS(sphere.set(Partition{2}, 1), std::invalid_argument);
}

TEST_CASE("low taylor coefficients for every dimension") {
    for (int n = 1; n <= 8; ++n) {
        TaylorCoefficients taylor = taylor_at_minus_one(n, std::min(2, n));
        CHECK(taylor.a[0] == mono({n}, YPolynomial(1)));
        CHECK(taylor.a[1] == mono({n}, YPolynomial(Rational(-n, 2))));
    }
    CHECK_THROWS_AS(taylor_at_minus_one(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(chern_power_moments(3, -1), std::invalid_argument);
}

TEST_CASE("printed golden tables for n = 4..10") {
    for (int n = 4; n <= 10; ++n) {
        TaylorCoefficients taylor = taylor_at_minus_one(n, 4);
        PowerMoments moments = chern_power_moments(n, 4);
        for (int i = 0; i <= 4; ++i) {
            CHECK(taylor.a[static_cast<size_t>(i)] == testsupport::printed_taylor(n, i));
            CHECK(moments.h[static_cast<size_t>(i)] == testsupport::printed_moment(n, i));
        }
    }
}

TEST_CASE("moment conversion identities") {
    // h(p^3) = -6 a_3 + 6 a_2 - a_1
    for (int n = 3; n <= 7; ++n) {
        TaylorCoefficients taylor = taylor_at_minus_one(n, 3);
        PowerMoments moments = chern_power_moments(n, 3);
        ChernPolynomial expected =
            taylor.a[3] * Rational(-6) + taylor.a[2] * Rational(6) - taylor.a[1];
        CHECK(moments.h[3] == expected);
        CHECK(moments.h[0] == taylor.a[0]);
    }
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
}

TEST_CASE("duality residual vanishes") {
    for (int n = 0; n <= 8; ++n) CHECK(duality_residual(n).is_zero());
}

TEST_CASE("euler specialization at y = -1") {
    ChernNumbers plane(2);
    plane.set(Partition{1, 1}, 9);
    plane.set(Partition{2}, 3);
    CHECK(evaluate_genus(hrr_genus_formula(2), plane).evaluate(Rational(-1)) == Rational(3));
    ChernNumbers cp3 = oracle::projective_space_chern(3);
    CHECK(evaluate_genus(hrr_genus_formula(3), cp3).evaluate(Rational(-1)) == Rational(4));
}

TEST_CASE("odd moments reduce to even ones with leading coefficient (i+1/2)n") {
    for (int n = 2; n <= 8; ++n) {
        for (int i = 0; 2 * i + 1 <= n; ++i) {
            std::vector<Rational> alpha = odd_moment_reduction(n, i);
            REQUIRE(alpha.size() == static_cast<size_t>(i) + 1);
            CHECK(alpha.back() == Rational(n) * (Rational(i) + Rational(1, 2)));
            // the combination reproduces h(p^{2i+1}) exactly
            PowerMoments moments = chern_power_moments(n, 2 * i + 1);
            ChernPolynomial combo;
            for (int j = 0; j <= i; ++j)
                combo += moments.h[static_cast<size_t>(2 * j)] * alpha[static_cast<size_t>(j)];
            CHECK(combo == moments.h[static_cast<size_t>(2 * i + 1)]);
        }
    }
}

TEST_CASE("evaluating at y = -1 always returns the top chern number") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long long> value(-50, 50);
    for (int n = 1; n <= 6; ++n) {
        ChernNumbers chern(n);
        for (const Partition& index : partitions_of(n)) chern.set(index, value(rng));
        YPolynomial genus = evaluate_genus(hrr_genus_formula(n), chern);
        CHECK(genus.evaluate(Rational(-1)) == Rational(chern.value(Partition{n})));
    }
}

TEST_CASE("genus coefficients have y-degree at most n") {
    for (int n = 0; n <= 8; ++n) {
        ChernPolynomial formula = hrr_genus_formula(n);
        for (const auto& [index, coeff] : formula.terms()) CHECK(coeff.degree() <= n);
    }
}

TEST_CASE("formula synthesis is safe to run concurrently") {
    std::vector<ChernPolynomial> parallel(7);
    std::vector<std::thread> workers;
    for (int n = 0; n < 7; ++n)
        workers.emplace_back([n, &parallel] { parallel[static_cast<size_t>(n)] = hrr_genus_formula(n); });
    for (auto& w : workers) w.join();
    for (int n = 0; n < 7; ++n) CHECK(parallel[static_cast<size_t>(n)] == hrr_genus_formula(n));
}
