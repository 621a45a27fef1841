#include "chiy/brute_force.hpp"
#include "chiy/localization.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace chiy;
using namespace chiy::testsupport;

namespace {

FixedPointData from_indices(int n, std::vector<int> ds) {
    std::vector<FixedPoint> points;
    for (int d : ds) points.emplace_back(d);
    return FixedPointData(n, std::move(points));
}

const ConstraintReport* find_report(const std::vector<ConstraintReport>& reports,
                                    const std::string& id) {
    for (const auto& report : reports) {
        if (report.id == id) return &report;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("morse indices from weights") {
    CHECK(FixedPoint({Rational(1), Rational(2)}).index() == 0);
    CHECK(FixedPoint({Rational(-1), Rational(3)}).index() == 1);
    CHECK(FixedPoint({Rational(-2), Rational(-5)}).index() == 2);
    CHECK(FixedPoint({Rational(-1, 3), Rational(2, 7)}).index() == 1);
    CHECK_THROWS_AS(FixedPoint({Rational(1), Rational(0)}), std::domain_error);

    FixedPointData plane(2, {FixedPoint({Rational(1), Rational(2)}),
                             FixedPoint({Rational(-1), Rational(1)}),
                             FixedPoint({Rational(-2), Rational(-1)})});
    CHECK(morse_indices(plane) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(FixedPointData(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(FixedPointData(1, {FixedPoint(2)}), std::invalid_argument);
    CHECK_THROWS_AS(FixedPointData(3, {FixedPoint({Rational(1)})}), std::invalid_argument);
}

TEST_CASE("localized chi_y and poincare polynomials") {
    FixedPointData plane = from_indices(2, {0, 1, 2});
    CHECK(localized_chi_y(plane) ==
          YPolynomial(1) - YPolynomial::variable() + YPolynomial::monomial(2, 1));
    CHECK(localized_poincare(plane) ==
          YPolynomial(1) + YPolynomial::monomial(2, 1) + YPolynomial::monomial(4, 1));

    FixedPointData spheres = from_indices(2, {0, 1, 1, 2});
    CHECK(localized_chi_y(spheres) ==
          YPolynomial(1) - YPolynomial::monomial(1, 2) + YPolynomial::monomial(2, 1));
    CHECK(localized_poincare(spheres) ==
          YPolynomial(1) + YPolynomial::monomial(2, 2) + YPolynomial::monomial(4, 1));

    FixedPointData point = from_indices(0, {0});
    CHECK(localized_chi_y(point) == YPolynomial(1));
    CHECK(localized_poincare(point) == YPolynomial(1));
}

TEST_CASE("obstruction battery on consistent data") {
    FixedPointData spheres = from_indices(2, {0, 1, 1, 2});
    ChernNumbers chern(2);
    chern.set(Partition{1, 1}, 8);
    chern.set(Partition{2}, 4);
    ObstructionInputs inputs;
    inputs.chern = &chern;
    auto reports = hamiltonian_obstruction_report(spheres, inputs);
    CHECK(!any_violated(reports));
    const ConstraintReport* cn = find_report(reports, "loc.chern.cn.4.3");
    REQUIRE(cn);
    CHECK(cn->left == Rational(4));
    CHECK(cn->right == Rational(4));
    const ConstraintReport* c1cn1 = find_report(reports, "loc.chern.c1cn1.4.3");
    REQUIRE(c1cn1);
    CHECK(c1cn1->left == Rational(8));
    CHECK(c1cn1->right == Rational(8));

    FixedPointData plane = from_indices(2, {0, 1, 2});
    ChernNumbers plane_chern(2);
    plane_chern.set(Partition{1, 1}, 9);
    plane_chern.set(Partition{2}, 3);
    ObstructionInputs plane_inputs;
    plane_inputs.chern = &plane_chern;
    plane_inputs.diamond = nullptr;
    auto plane_reports = hamiltonian_obstruction_report(plane, plane_inputs);
    CHECK(!any_violated(plane_reports));
    const ConstraintReport* pc = find_report(plane_reports, "loc.chern.c1cn1.4.3");
    REQUIRE(pc);
    CHECK(pc->left == Rational(9));  // 6*2 - 1*3 = 9
    CHECK(pc->right == Rational(9));
}

TEST_CASE("obstruction battery flags broken duality") {
    FixedPointData bad = from_indices(1, {0, 0, 1});
    auto reports = hamiltonian_obstruction_report(bad);
    const ConstraintReport* duality = find_report(reports, "loc.duality.4.1");
    REQUIRE(duality);
    CHECK(duality->status == ConstraintStatus::Violated);
    CHECK(any_violated(reports));
    // unverifiable companions are reported as not-applicable, not violations
    const ConstraintReport* chern = find_report(reports, "loc.chern.4.3");
    REQUIRE(chern);
    CHECK(chern->status == ConstraintStatus::NotApplicable);
}

TEST_CASE("duality check passes exactly for palindromic index histograms") {
    for (int n = 0; n <= 3; ++n) {
        // every multiset of indices {0..n} of size <= 4
        std::vector<std::vector<int>> multisets;
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& acc, int lo) {
            if (!acc.empty()) multisets.push_back(acc);
            if (acc.size() == 4) return;
            for (int d = lo; d <= n; ++d) {
                acc.push_back(d);
                rec(acc, d);
                acc.pop_back();
            }
        };
        std::vector<int> acc;
        rec(acc, 0);
        for (const auto& ds : multisets) {
            std::vector<long long> histogram(static_cast<size_t>(n) + 1, 0);
            for (int d : ds) ++histogram[static_cast<size_t>(d)];
            bool palindromic = true;
            for (int d = 0; d <= n; ++d)
                palindromic = palindromic && histogram[static_cast<size_t>(d)] ==
                                                 histogram[static_cast<size_t>(n - d)];
            FixedPointData data = from_indices(n, std::vector<int>(ds));
            auto reports = hamiltonian_obstruction_report(data);
            const ConstraintReport* duality = find_report(reports, "loc.duality.4.1");
            REQUIRE(duality);
            CHECK((duality->status == ConstraintStatus::Satisfied) == palindromic);
        }
    }
}

TEST_CASE("projective-space cross oracle") {
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> ds(static_cast<size_t>(n) + 1);
        for (int d = 0; d <= n; ++d) ds[static_cast<size_t>(d)] = d;
        YPolynomial expected;
        for (int p = 0; p <= n; ++p)
            expected += YPolynomial::monomial(p, Rational((p % 2) ? -1 : 1));
        YPolynomial local = localized_chi_y(from_indices(n, ds));
        CHECK(local == expected);
        YPolynomial global =
            evaluate_genus(hrr_genus_formula(n), oracle::projective_space_chern(n));
        CHECK(global == expected);
    }
}

TEST_CASE("deeper chern combinations on projective spaces") {
    for (int n = 3; n <= 6; ++n) {
        std::vector<int> ds(static_cast<size_t>(n) + 1);
        for (int d = 0; d <= n; ++d) ds[static_cast<size_t>(d)] = d;
        ChernNumbers chern = oracle::projective_space_chern(n);
        ObstructionInputs inputs;
        inputs.chern = &chern;
        inputs.depth = 4;
        auto reports = hamiltonian_obstruction_report(from_indices(n, ds), inputs);
        CHECK(!any_violated(reports));
        CHECK(find_report(reports, "loc.chern.a3.4.3"));
        if (n >= 4) CHECK(find_report(reports, "loc.chern.a4.4.3"));
    }
}

TEST_CASE("whenever the genus-poincare check passes, the signature check passes") {
    std::mt19937_64 rng(900);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<int> count(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        int n = dim(rng);
        std::uniform_int_distribution<int> index(0, n);
        std::vector<int> ds;
        for (int k = count(rng); k > 0; --k) ds.push_back(index(rng));
        // random diamond companion half of the time
        std::optional<HodgeDiamond> diamond;
        if (trial % 2) diamond = random_kaehler_diamond(rng, n, trial % 4 == 1);
        ObstructionInputs inputs;
        if (diamond) inputs.diamond = &*diamond;
        auto reports = hamiltonian_obstruction_report(from_indices(n, ds), inputs);
        const ConstraintReport* genus_poincare = find_report(reports, "loc.genus-poincare.4.3");
        const ConstraintReport* signature = find_report(reports, "loc.signature.4.3");
        REQUIRE(genus_poincare);
        REQUIRE(signature);
        if (genus_poincare->status == ConstraintStatus::Satisfied)
            CHECK(signature->status == ConstraintStatus::Satisfied);
    }
}

TEST_CASE("diamond companion must match the fixed-point counts") {
    FixedPointData plane = from_indices(2, {0, 1, 2});
    HodgeDiamond p2 = p2_diamond();
    ObstructionInputs inputs;
    inputs.diamond = &p2;
    auto reports = hamiltonian_obstruction_report(plane, inputs);
    CHECK(!any_violated(reports));

    HodgeDiamond k3 = k3_diamond();
    ObstructionInputs bad;
    bad.diamond = &k3;
    auto broken = hamiltonian_obstruction_report(plane, bad);
    const ConstraintReport* betti = find_report(broken, "loc.betti.4.2");
    REQUIRE(betti);
    CHECK(betti->status == ConstraintStatus::Violated);

    HodgeDiamond wrong_dim = torus_diamond();
    ObstructionInputs mismatched;
    mismatched.diamond = &wrong_dim;
    CHECK_THROWS_AS(hamiltonian_obstruction_report(plane, mismatched), std::invalid_argument);
}
