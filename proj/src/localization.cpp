#include "chiy/localization.hpp"

#include <stdexcept>

namespace chiy {

FixedPoint::FixedPoint(int index) : index_(index) {
    if (index < 0) throw std::invalid_argument("FixedPoint: negative index");
}

FixedPoint::FixedPoint(std::vector<Rational> weights) {
    int negatives = 0;
    for (const Rational& w : weights) {
        if (w.is_zero())
            throw std::domain_error("FixedPoint: zero weight violates nondegeneracy");
        if (w.sign() < 0) ++negatives;
    }
    index_ = negatives;
    weights_ = std::move(weights);
}

FixedPointData::FixedPointData(int dimension, std::vector<FixedPoint> points)
    : dimension_(dimension), points_(std::move(points)) {
    if (dimension < 0) throw std::invalid_argument("FixedPointData: negative dimension");
    if (points_.empty()) throw std::invalid_argument("FixedPointData: fixed point set must be nonempty");
    for (const FixedPoint& point : points_) {
        if (point.index() > dimension)
            throw std::invalid_argument("FixedPointData: index exceeds dimension");
        if (point.weights() && static_cast<int>(point.weights()->size()) != dimension)
            throw std::invalid_argument("FixedPointData: expected " + std::to_string(dimension) +
                                        " weights per fixed point");
    }
}

std::vector<int> morse_indices(const FixedPointData& data) {
    std::vector<int> out;
    out.reserve(data.points().size());
    for (const FixedPoint& point : data.points()) out.push_back(point.index());
    return out;
}

namespace {

std::vector<long long> index_histogram(const FixedPointData& data) {
    std::vector<long long> counts(static_cast<size_t>(data.dimension()) + 1, 0);
    for (const FixedPoint& point : data.points()) ++counts[static_cast<size_t>(point.index())];
    return counts;
}

long long falling_factorial(long long p, int i) {
    long long r = 1;
    for (int k = 0; k < i; ++k) r *= p - k;
    return r;
}

ConstraintReport compare_polynomials(const std::string& id, const YPolynomial& left,
                                     const YPolynomial& right, const std::string& note) {
    ConstraintReport report;
    report.id = id;
    if (left == right) {
        report.status = ConstraintStatus::Satisfied;
        report.left = report.right = Rational(0);
        return report;
    }
    report.status = ConstraintStatus::Violated;
    int top = std::max(left.degree(), right.degree());
    for (int k = 0; k <= top; ++k) {
        if (left.coeff(k) != right.coeff(k)) {
            report.left = left.coeff(k);
            report.right = right.coeff(k);
            report.witness = note + "; first mismatch at y^" + std::to_string(k) + ": " +
                             left.str() + " vs " + right.str();
            break;
        }
    }
    return report;
}

}  // namespace

YPolynomial localized_chi_y(const FixedPointData& data) {
    YPolynomial acc;
    for (const FixedPoint& point : data.points()) {
        int d = point.index();
        acc += YPolynomial::monomial(d, Rational((d % 2) ? -1 : 1));
    }
    return acc;
}

YPolynomial localized_chi_y_dual(const FixedPointData& data) {
    YPolynomial acc;
    int n = data.dimension();
    for (const FixedPoint& point : data.points()) {
        int d = n - point.index();
        acc += YPolynomial::monomial(d, Rational((d % 2) ? -1 : 1));
    }
    return acc;
}

YPolynomial localized_poincare(const FixedPointData& data) {
    YPolynomial acc;
    for (const FixedPoint& point : data.points())
        acc += YPolynomial::monomial(2 * point.index(), Rational(1));
    return acc;
}

std::vector<ConstraintReport> hamiltonian_obstruction_report(const FixedPointData& data,
                                                             const ObstructionInputs& inputs) {
    int n = data.dimension();
    if (inputs.diamond && inputs.diamond->dimension() != n)
        throw std::invalid_argument("hamiltonian_obstruction_report: diamond dimension mismatch");
    if (inputs.chern && inputs.chern->dimension() != n)
        throw std::invalid_argument("hamiltonian_obstruction_report: chern dimension mismatch");
    if (inputs.betti && inputs.betti->top_degree() != 2 * n)
        throw std::invalid_argument("hamiltonian_obstruction_report: betti length mismatch");
    if (inputs.depth < 0)
        throw std::invalid_argument("hamiltonian_obstruction_report: negative depth");

    std::vector<ConstraintReport> reports;
    YPolynomial chi_local = localized_chi_y(data);
    YPolynomial poincare_local = localized_poincare(data);
    std::vector<long long> counts = index_histogram(data);

    // (a) chi_y = (-y)^n chi_{1/y} at the fixed-point level.
    {
        ConstraintReport report =
            compare_polynomials("loc.duality.4.1", chi_local, localized_chi_y_dual(data),
                                "index multiset is not symmetric under d -> n-d");
        if (report.violated())
            report.witness += "; not realizable by a Hamiltonian action with isolated fixed points";
        reports.push_back(std::move(report));
    }

    // Preferred sources for the global invariants: explicit betti, then the
    // diamond, then the localization data itself.
    YPolynomial chi_global = inputs.diamond ? chi_profile(*inputs.diamond).chi_y : chi_local;
    YPolynomial poincare_global;
    std::string poincare_source;
    if (inputs.betti) {
        poincare_global = poincare_polynomial(*inputs.betti);
        poincare_source = "betti";
    } else if (inputs.diamond) {
        poincare_global = poincare_polynomial(betti_from_diamond(*inputs.diamond));
        poincare_source = "diamond";
    } else {
        poincare_global = poincare_local;
        poincare_source = "fixed points";
    }

    // (b) chi_{-y^2} = P_y.
    YPolynomial chi_at_minus_y2 = chi_global.compose(YPolynomial::monomial(2, Rational(-1)));
    reports.push_back(compare_polynomials("loc.genus-poincare.4.3", chi_at_minus_y2,
                                          poincare_global,
                                          "chi_{-y^2} disagrees with P_y (" + poincare_source + ")"));

    // (c) signature = alternating sum of even Betti numbers.
    {
        Rational signature = chi_global.evaluate(Rational(1));
        Rational alternating(0);
        for (int i = 0; i <= n; ++i) {
            Rational b_2i = inputs.betti
                                ? Rational(inputs.betti->b(2 * i))
                                : (inputs.diamond
                                       ? Rational(betti_from_diamond(*inputs.diamond).b(2 * i))
                                       : Rational(poincare_local.coeff(2 * i)));
            alternating += (i % 2) ? -b_2i : b_2i;
        }
        reports.push_back(compare_exact("loc.signature.4.3", signature, alternating));
    }

    // (d) Betti-determined Chern combinations, against supplied Chern numbers.
    if (!inputs.chern) {
        ConstraintReport report;
        report.id = "loc.chern.4.3";
        report.status = ConstraintStatus::NotApplicable;
        report.witness = "no Chern numbers supplied; Betti-determined combinations unverifiable";
        reports.push_back(std::move(report));
    } else {
        long long total = 0, weighted = 0;
        for (int i = 0; i <= n; ++i) {
            total += counts[static_cast<size_t>(i)];
            weighted += counts[static_cast<size_t>(i)] * static_cast<long long>(i) * (i - 1);
        }
        // c_n = sum b_{2i}
        Partition top = (n == 0) ? Partition() : Partition{n};
        reports.push_back(
            compare_exact("loc.chern.cn.4.3", Rational(inputs.chern->value(top)), Rational(total)));
        // c_1 c_{n-1} = 6 sum i(i-1) b_{2i} - n(3n-5)/2 sum b_{2i}
        if (auto index = c1cn1_partition(n)) {
            Rational rhs = Rational(6 * weighted) -
                           Rational(n) * Rational(3 * n - 5, 2) * Rational(total);
            reports.push_back(compare_exact("loc.chern.c1cn1.4.3",
                                            Rational(inputs.chern->value(*index)), rhs));
        }
        // deeper combinations via the Taylor coefficients a_i
        int depth = std::min(inputs.depth, n);
        if (depth >= 3) {
            TaylorCoefficients taylor = taylor_at_minus_one(n, depth);
            for (int i = 3; i <= depth; ++i) {
                Rational left =
                    evaluate_genus(taylor.a[static_cast<size_t>(i)], *inputs.chern).constant_term();
                Rational right(0);
                for (int p = 0; p <= n; ++p)
                    right += Rational(counts[static_cast<size_t>(p)] * falling_factorial(p, i));
                right /= Rational(factorial(static_cast<unsigned long>(i)));
                if (i % 2) right = -right;
                reports.push_back(
                    compare_exact("loc.chern.a" + std::to_string(i) + ".4.3", left, right));
            }
        }
    }

    // (e) diamond (or explicit betti) versus the localized Poincare polynomial.
    if (inputs.diamond) {
        reports.push_back(compare_polynomials(
            "loc.betti.4.2", poincare_polynomial(betti_from_diamond(*inputs.diamond)),
            poincare_local, "diamond Betti numbers disagree with the fixed-point counts"));
    } else if (inputs.betti) {
        reports.push_back(compare_polynomials(
            "loc.betti.4.2", poincare_polynomial(*inputs.betti), poincare_local,
            "supplied Betti numbers disagree with the fixed-point counts"));
    } else {
        ConstraintReport report;
        report.id = "loc.betti.4.2";
        report.status = ConstraintStatus::NotApplicable;
        report.witness = "no diamond or Betti data supplied";
        reports.push_back(std::move(report));
    }

    return reports;
}

}  // namespace chiy
