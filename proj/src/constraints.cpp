#include "chiy/constraints.hpp"

#include <stdexcept>

namespace chiy {

const char* to_string(ConstraintStatus status) {
    switch (status) {
        case ConstraintStatus::Satisfied: return "satisfied";
        case ConstraintStatus::Violated: return "violated";
        case ConstraintStatus::EqualityAttained: return "equality-attained";
        case ConstraintStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

bool any_violated(const std::vector<ConstraintReport>& reports) {
    for (const auto& report : reports) {
        if (report.violated()) return true;
    }
    return false;
}

namespace {
void require_length(const BettiVector& betti, int n, const char* where) {
    if (betti.top_degree() != 2 * n)
        throw std::invalid_argument(std::string(where) + ": betti length must be 2n+1");
}
}  // namespace

Rational salamon_residual(const BettiVector& betti, int n) {
    require_length(betti, n, "salamon_residual");
    if (n % 2 != 0) throw std::domain_error("salamon_residual: requires even complex dimension");
    Rational acc(0);
    for (int i = 0; i <= 2 * n; ++i) {
        // 3i^2 - n(3n + 1/2), kept exact through the half-integer constant
        Rational weight = Rational(3 * i * i) - Rational(n) * (Rational(3 * n) + Rational(1, 2));
        Rational term = Rational(betti.b(i)) * weight;
        acc += (i % 2) ? -term : term;
    }
    return acc;
}

Rational c1cn1_lower_bound(const BettiVector& betti, int n) {
    require_length(betti, n, "c1cn1_lower_bound");
    long long k = static_cast<long long>(n) * (3LL * n + 1);
    Rational acc(0);
    for (int i = 0; i <= 2 * n; ++i) {
        long long b = betti.b(i);
        if (i % 2 == 0)
            acc += Rational(b * (3LL * i * i - k));
        else
            acc -= Rational(b * (9LL * i * i - k));
    }
    return acc * Rational(1, 2);
}

Rational calabi_yau_residual(const BettiVector& betti, int n) {
    require_length(betti, n, "calabi_yau_residual");
    long long k = static_cast<long long>(n) * (3LL * n + 1);
    Rational acc(0);
    for (int i = 0; i <= 2 * n; ++i) {
        long long b = betti.b(i);
        if (i % 2 == 1)
            acc += Rational(b * (9LL * i * i - k));
        else
            acc -= Rational(b * (3LL * i * i - k));
    }
    return acc;
}

Rational c2cn2_lower_bound(const BettiVector& betti, int n) {
    require_length(betti, n, "c2cn2_lower_bound");
    if (n % 2 != 0) throw std::domain_error("c2cn2_lower_bound: requires even complex dimension");
    long long k = static_cast<long long>(n) *
                  (75LL * n * n * n + 90LL * n * n + 5LL * n - 2);
    Rational acc(0);
    for (int i = 0; i <= 2 * n; ++i) {
        long long b = betti.b(i);
        long long i4 = static_cast<long long>(i) * i * i * i;
        if (i % 2 == 0)
            acc += Rational(b) * Rational(75 * i4 - k);
        else
            acc -= Rational(b) * Rational(165 * i4 - k);
    }
    return acc * Rational(1, 24);
}

std::vector<ConstraintReport> minus_one_consistency(const HodgeDiamond& diamond,
                                                    const ChernNumbers& chern, int depth) {
    int n = diamond.dimension();
    if (chern.dimension() != n)
        throw std::invalid_argument("minus_one_consistency: dimension mismatch");
    if (depth < 0 || depth > n)
        throw std::invalid_argument("minus_one_consistency: depth out of range");
    PowerMoments moments = chern_power_moments(n, depth);
    std::vector<ConstraintReport> reports;
    for (int i = 0; i <= depth; ++i) {
        Rational left = h_moment(diamond, MomentSpec::p_power(i));
        YPolynomial value = evaluate_genus(moments.h[static_cast<size_t>(i)], chern);
        Rational right = value.constant_term();  // moments are y-free
        ConstraintReport report = compare_exact("minusone.p" + std::to_string(i), left, right);
        if (report.violated())
            report.witness = "diamond moment h(p^" + std::to_string(i) +
                             ") disagrees with the Chern-number expression";
        reports.push_back(std::move(report));
    }
    return reports;
}

std::optional<Partition> c1cn1_partition(int n) {
    if (n <= 0) return std::nullopt;
    if (n == 1) return Partition{1};  // c_1 c_0 = c_1
    return Partition{n - 1, 1};
}

std::optional<Partition> c2cn2_partition(int n) {
    if (n < 2) return std::nullopt;
    if (n == 2) return Partition{2};  // c_2 c_0 = c_2
    if (n == 3) return Partition{2, 1};
    return Partition{n - 2, 2};
}

ConstraintReport compare_exact(const std::string& id, const Rational& left,
                               const Rational& right) {
    ConstraintReport report;
    report.id = id;
    report.left = left;
    report.right = right;
    report.status = (left == right) ? ConstraintStatus::Satisfied : ConstraintStatus::Violated;
    return report;
}

ConstraintReport lower_bound_report(const std::string& id, const Rational& value,
                                    const Rational& bound, std::optional<bool> pure) {
    ConstraintReport report;
    report.id = id;
    report.left = value;
    report.right = bound;
    if (value > bound) {
        report.status = ConstraintStatus::Satisfied;
    } else if (value == bound) {
        if (pure && !*pure) {
            report.status = ConstraintStatus::Violated;
            report.witness = "equality attained but the diamond is not of pure type";
        } else {
            report.status = ConstraintStatus::EqualityAttained;
            if (!pure) report.witness = "equality attained; purity not verifiable without a diamond";
        }
    } else {
        report.status = ConstraintStatus::Violated;
        report.witness = "value falls below the lower bound";
    }
    return report;
}

}  // namespace chiy
