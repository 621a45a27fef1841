#include "chiy/checks.hpp"

#include "chiy/brute_force.hpp"
#include "chiy/symmetric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chiy {

namespace {

ConstraintReport not_applicable(const std::string& id, const std::string& witness) {
    ConstraintReport report;
    report.id = id;
    report.status = ConstraintStatus::NotApplicable;
    report.witness = witness;
    return report;
}

constexpr const char* kNoBetti = "no Betti data supplied (betti list or hodge diamond required)";

bool claims_kaehler(StructureClaim s) { return s != StructureClaim::AlmostComplex; }
bool claims_calabi_yau(StructureClaim s) {
    return s == StructureClaim::CalabiYau || s == StructureClaim::HyperKaehler;
}
bool claims_mirror(StructureClaim s) {
    return s == StructureClaim::Mirror || s == StructureClaim::HyperKaehler;
}

void append_validation(std::vector<ConstraintReport>& reports, const HodgeDiamond& diamond,
                       ValidationTier tier) {
    std::vector<ValidationIssue> issues = validate(diamond, tier);
    std::vector<std::string> ids = {"hodge.raw"};
    if (tier != ValidationTier::Raw) {
        ids = {"hodge.serre", "hodge.conjugation", "hodge.diagonal"};
        if (tier == ValidationTier::Mirror) {
            ids.push_back("hodge.mirror");
            ids.push_back("hodge.parity");
        }
    }
    std::map<std::string, std::vector<const ValidationIssue*>> grouped;
    for (const auto& issue : issues) grouped[issue.constraint].push_back(&issue);
    for (const std::string& id : ids) {
        ConstraintReport report;
        report.id = id;
        auto it = grouped.find(id);
        if (it == grouped.end()) {
            report.status = ConstraintStatus::Satisfied;
        } else {
            report.status = ConstraintStatus::Violated;
            report.left = Rational(static_cast<long long>(it->second.size()));
            report.witness = it->second.front()->detail;
            if (it->second.size() > 1)
                report.witness += " (+" + std::to_string(it->second.size() - 1) + " more)";
        }
        reports.push_back(std::move(report));
    }
}

enum class SalamonMode { HyperKaehler, Mirror, ReportOnly };

void append_salamon(std::vector<ConstraintReport>& reports, const ManifoldManifest& m,
                    SalamonMode mode) {
    int n = m.dimension;
    if (n % 2 != 0) {
        reports.push_back(not_applicable("salamon.3.1", "requires even complex dimension"));
        return;
    }
    Rational residual = salamon_residual(*m.betti, n);
    if (mode == SalamonMode::ReportOnly) {
        ConstraintReport report = not_applicable(
            "salamon.3.1", "mirror symmetry not claimed; residual value reported on the left");
        report.left = residual;
        reports.push_back(std::move(report));
        return;
    }
    if (mode == SalamonMode::HyperKaehler) {
        ConstraintReport report = compare_exact("salamon.3.1", residual, Rational(0));
        if (report.violated())
            report.witness = "nonzero Salamon residual certifies the data is not hyperKaehler";
        reports.push_back(std::move(report));
        return;
    }
    auto index = c1cn1_partition(n);
    if (m.chern && index) {
        ConstraintReport report =
            compare_exact("salamon.3.1", residual, Rational(m.chern->value(*index)));
        if (report.violated())
            report.witness = "mirror identity: Salamon residual must equal " + index->monomial();
        reports.push_back(std::move(report));
    } else {
        ConstraintReport report = not_applicable(
            "salamon.3.1", "no Chern numbers supplied; residual value reported on the left");
        report.left = residual;
        reports.push_back(std::move(report));
    }
}

void append_c1cn1_bound(std::vector<ConstraintReport>& reports, const ManifoldManifest& m,
                        std::optional<bool> pure, bool applicable = true) {
    int n = m.dimension;
    Rational bound = c1cn1_lower_bound(*m.betti, n);
    auto index = c1cn1_partition(n);
    if (!applicable) {
        ConstraintReport report = not_applicable(
            "bound.c1cn1.3.2", "kaehler structure not claimed; bound value reported on the right");
        report.right = bound;
        reports.push_back(std::move(report));
        return;
    }
    if (m.chern && index) {
        reports.push_back(lower_bound_report("bound.c1cn1.3.2",
                                             Rational(m.chern->value(*index)), bound, pure));
    } else {
        ConstraintReport report = not_applicable(
            "bound.c1cn1.3.2", "no Chern numbers supplied; bound value reported on the right");
        report.right = bound;
        reports.push_back(std::move(report));
    }
}

void append_calabi_yau(std::vector<ConstraintReport>& reports, const ManifoldManifest& m,
                       std::optional<bool> pure, bool applicable = true) {
    int n = m.dimension;
    auto index = c1cn1_partition(n);
    if (m.chern && index && m.chern->value(*index) != 0) {
        reports.push_back(not_applicable(
            "cy.3.3", index->monomial() + " != 0: the Calabi-Yau residual does not apply"));
        return;
    }
    Rational residual = calabi_yau_residual(*m.betti, n);
    if (!applicable) {
        ConstraintReport report = not_applicable(
            "cy.3.3",
            "vanishing " + (index ? index->monomial() : std::string("c1*c(n-1)")) +
                " not claimed or verifiable; residual value reported on the left");
        report.left = residual;
        reports.push_back(std::move(report));
        return;
    }
    ConstraintReport report = lower_bound_report("cy.3.3", residual, Rational(0), pure);
    if (report.violated() && residual < Rational(0))
        report.witness = "negative Calabi-Yau residual";
    reports.push_back(std::move(report));
}

void append_c2cn2_bound(std::vector<ConstraintReport>& reports, const ManifoldManifest& m,
                        std::optional<bool> pure, bool strict_for_hyperkaehler,
                        bool applicable = true) {
    int n = m.dimension;
    if (n % 2 != 0) {
        reports.push_back(not_applicable("bound.c2cn2.3.4", "requires even complex dimension"));
        return;
    }
    Rational bound = c2cn2_lower_bound(*m.betti, n);
    auto index = c2cn2_partition(n);
    if (!applicable) {
        ConstraintReport report = not_applicable(
            "bound.c2cn2.3.4",
            "hyperkaehler structure not claimed; bound value reported on the right");
        report.right = bound;
        reports.push_back(std::move(report));
        return;
    }
    if (m.chern && index) {
        ConstraintReport report =
            lower_bound_report("bound.c2cn2.3.4", Rational(m.chern->value(*index)), bound, pure);
        if (report.status == ConstraintStatus::EqualityAttained && strict_for_hyperkaehler) {
            report.status = ConstraintStatus::Violated;
            report.witness = "the hyperKaehler lower bound is strict and cannot be attained";
        }
        reports.push_back(std::move(report));
    } else {
        ConstraintReport report = not_applicable(
            "bound.c2cn2.3.4", "no Chern numbers supplied; bound value reported on the right");
        report.right = bound;
        reports.push_back(std::move(report));
    }
}

}  // namespace

ConstraintReport oracle_formula_report(int n) {
    if (n > 8)
        return not_applicable("oracle.formula", "direct multivariate expansion capped at n <= 8");
    ChernPolynomial pipeline = hrr_genus_formula(n);
    ChernPolynomial direct =
        oracle::expand_product_direct(hrr_factor(n + 1).coefficients(), n);
    ConstraintReport report;
    report.id = "oracle.formula";
    report.status =
        (pipeline == direct) ? ConstraintStatus::Satisfied : ConstraintStatus::Violated;
    if (report.violated())
        report.witness = "pipeline formula disagrees with direct multivariate expansion";
    return report;
}

std::vector<ConstraintReport> check_battery(const ManifoldManifest& m, const CheckOptions& options) {
    std::vector<ConstraintReport> reports;
    int n = m.dimension;
    ValidationTier tier = options.tier_override.value_or(tier_for(m.structure));
    std::optional<bool> pure;
    if (m.hodge) pure = predicates(*m.hodge).is_pure;

    if (m.hodge) append_validation(reports, *m.hodge, tier);

    if (m.hodge && m.chern) {
        int depth = std::min(options.depth, n);
        auto minus_one = minus_one_consistency(*m.hodge, *m.chern, depth);
        reports.insert(reports.end(), minus_one.begin(), minus_one.end());
    } else {
        reports.push_back(
            not_applicable("minusone", "requires both a hodge diamond and chern numbers"));
    }

    if (claims_kaehler(m.structure)) {
        if (m.betti) {
            append_c1cn1_bound(reports, m, pure);
            if (claims_calabi_yau(m.structure)) append_calabi_yau(reports, m, pure);
            if (claims_mirror(m.structure))
                append_salamon(reports, m,
                               m.structure == StructureClaim::HyperKaehler
                                   ? SalamonMode::HyperKaehler
                                   : SalamonMode::Mirror);
            if (m.structure == StructureClaim::HyperKaehler)
                append_c2cn2_bound(reports, m, pure, true);
        } else {
            reports.push_back(not_applicable("bound.c1cn1.3.2", kNoBetti));
            if (claims_calabi_yau(m.structure)) reports.push_back(not_applicable("cy.3.3", kNoBetti));
            if (claims_mirror(m.structure))
                reports.push_back(not_applicable("salamon.3.1", kNoBetti));
            if (m.structure == StructureClaim::HyperKaehler)
                reports.push_back(not_applicable("bound.c2cn2.3.4", kNoBetti));
        }
    }

    if (options.oracle) reports.push_back(oracle_formula_report(n));
    return reports;
}

std::vector<ConstraintReport> bounds_battery(const ManifoldManifest& m, const CheckOptions& options) {
    if (!m.betti)
        throw std::invalid_argument("bounds: manifest carries no Betti data (betti or hodge)");
    std::vector<ConstraintReport> reports;
    std::optional<bool> pure;
    if (m.hodge) pure = predicates(*m.hodge).is_pure;
    // Values are always reported; comparison statuses only under the theorem
    // hypotheses the manifest actually claims.
    SalamonMode salamon_mode = m.structure == StructureClaim::HyperKaehler
                                   ? SalamonMode::HyperKaehler
                               : claims_mirror(m.structure) ? SalamonMode::Mirror
                                                            : SalamonMode::ReportOnly;
    append_salamon(reports, m, salamon_mode);
    append_c1cn1_bound(reports, m, pure, claims_kaehler(m.structure));
    bool cy_applicable =
        claims_calabi_yau(m.structure) ||
        (claims_kaehler(m.structure) && m.chern && c1cn1_partition(m.dimension) &&
         m.chern->value(*c1cn1_partition(m.dimension)) == 0);
    append_calabi_yau(reports, m, pure, cy_applicable);
    append_c2cn2_bound(reports, m, pure, true, m.structure == StructureClaim::HyperKaehler);
    if (options.oracle) reports.push_back(oracle_formula_report(m.dimension));
    return reports;
}

std::vector<ConstraintReport> localize_battery(const ManifoldManifest& m, const CheckOptions& options) {
    if (!m.fixed_points)
        throw std::invalid_argument("localize: manifest carries no fixed_points data");
    ObstructionInputs inputs;
    inputs.diamond = m.hodge ? &*m.hodge : nullptr;
    inputs.chern = m.chern ? &*m.chern : nullptr;
    inputs.betti = m.betti ? &*m.betti : nullptr;
    inputs.depth = options.depth;
    std::vector<ConstraintReport> reports = hamiltonian_obstruction_report(*m.fixed_points, inputs);
    if (options.oracle) reports.push_back(oracle_formula_report(m.dimension));
    return reports;
}

}  // namespace chiy
