// chiy: exact chi_y-genus tables and consistency checks for manifold data.
//
// Exit status: 0 all constraints satisfied, 1 at least one violation,
// 2 input error.
#include "chiy/checks.hpp"
#include "chiy/genus.hpp"
#include "chiy/manifest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using chiy::ChernPolynomial;
using chiy::ConstraintReport;
using chiy::YPolynomial;
using nlohmann::ordered_json;

ordered_json ypoly_json(const YPolynomial& p) {
    if (p.is_constant()) return p.constant_term().str();
    ordered_json dense = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k) dense.push_back(p.coeff(k).str());
    return dense;
}

ordered_json chern_poly_json(const ChernPolynomial& poly) {
    ordered_json terms = ordered_json::array();
    for (const auto& [index, coeff] : poly.terms()) {
        ordered_json term;
        term["partition"] = index.key();
        term["monomial"] = index.monomial();
        term["coefficient"] = ypoly_json(coeff);
        terms.push_back(std::move(term));
    }
    return terms;
}

ordered_json reports_json(const std::vector<ConstraintReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& report : reports) {
        ordered_json record;
        record["id"] = report.id;
        record["status"] = chiy::to_string(report.status);
        record["left"] = report.left.str();
        record["right"] = report.right.str();
        record["witness"] = report.witness;
        out.push_back(std::move(record));
    }
    return out;
}

void print_reports_text(const std::vector<ConstraintReport>& reports) {
    for (const auto& report : reports) {
        std::cout << report.id << ": " << chiy::to_string(report.status);
        bool validation = report.id.rfind("hodge.", 0) == 0;
        if (!validation && report.status != chiy::ConstraintStatus::NotApplicable)
            std::cout << "  [left = " << report.left << ", right = " << report.right << "]";
        if (!report.witness.empty()) std::cout << "  (" << report.witness << ")";
        std::cout << "\n";
    }
    size_t violations = 0;
    for (const auto& report : reports) violations += report.violated() ? 1 : 0;
    if (violations == 0)
        std::cout << "summary: all constraints satisfied\n";
    else
        std::cout << "summary: " << violations << " constraint(s) violated\n";
}

int reports_exit(const std::vector<ConstraintReport>& reports) {
    return chiy::any_violated(reports) ? 1 : 0;
}

void emit_battery(const std::string& command, const chiy::ManifoldManifest& manifest,
                  const std::vector<ConstraintReport>& reports, bool as_json) {
    if (as_json) {
        ordered_json out;
        out["command"] = command;
        out["manifest"] = manifest.name;
        out["dimension"] = manifest.dimension;
        out["structure"] = chiy::to_string(manifest.structure);
        out["reports"] = reports_json(reports);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "manifest: " << (manifest.name.empty() ? "(unnamed)" : manifest.name)
                  << " (dimension " << manifest.dimension << ", structure "
                  << chiy::to_string(manifest.structure) << ")\n";
        print_reports_text(reports);
    }
}

struct TableCommand {
    int dimension = 0;
    int depth = -1;
    bool json = false;
    bool oracle = false;
};

int run_formula(const TableCommand& cmd) {
    ChernPolynomial formula = chiy::hrr_genus_formula(cmd.dimension);
    std::vector<ConstraintReport> oracle_reports;
    if (cmd.oracle) oracle_reports.push_back(chiy::oracle_formula_report(cmd.dimension));
    if (cmd.json) {
        ordered_json out;
        out["command"] = "formula";
        out["dimension"] = cmd.dimension;
        out["terms"] = chern_poly_json(formula);
        if (cmd.oracle) out["reports"] = reports_json(oracle_reports);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chi_y in dimension " << cmd.dimension << "\n";
        if (formula.is_zero()) std::cout << "  0\n";
        for (const auto& [index, coeff] : formula.terms())
            std::cout << "  " << index.monomial() << " : " << coeff.str() << "\n";
        if (cmd.oracle) print_reports_text(oracle_reports);
    }
    return reports_exit(oracle_reports);
}

int run_taylor(const TableCommand& cmd) {
    int depth = cmd.depth < 0 ? std::min(4, cmd.dimension) : cmd.depth;
    chiy::TaylorCoefficients taylor = chiy::taylor_at_minus_one(cmd.dimension, depth);
    std::vector<ConstraintReport> oracle_reports;
    if (cmd.oracle) oracle_reports.push_back(chiy::oracle_formula_report(cmd.dimension));
    if (cmd.json) {
        ordered_json out;
        out["command"] = "taylor";
        out["dimension"] = cmd.dimension;
        out["depth"] = depth;
        ordered_json list = ordered_json::array();
        for (size_t i = 0; i < taylor.a.size(); ++i) {
            ordered_json entry;
            entry["name"] = "a_" + std::to_string(i);
            entry["terms"] = chern_poly_json(taylor.a[i]);
            list.push_back(std::move(entry));
        }
        out["coefficients"] = std::move(list);
        if (cmd.oracle) out["reports"] = reports_json(oracle_reports);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "chi_y at y = -1, dimension " << cmd.dimension << ", depth " << depth << "\n";
        for (size_t i = 0; i < taylor.a.size(); ++i)
            std::cout << "  a_" << i << " = " << taylor.a[i].str() << "\n";
        if (cmd.oracle) print_reports_text(oracle_reports);
    }
    return reports_exit(oracle_reports);
}

int run_moments(const TableCommand& cmd) {
    int depth = cmd.depth < 0 ? std::min(4, cmd.dimension) : cmd.depth;
    chiy::PowerMoments moments = chiy::chern_power_moments(cmd.dimension, depth);
    std::vector<ConstraintReport> oracle_reports;
    if (cmd.oracle) oracle_reports.push_back(chiy::oracle_formula_report(cmd.dimension));
    if (cmd.json) {
        ordered_json out;
        out["command"] = "moments";
        out["dimension"] = cmd.dimension;
        out["depth"] = depth;
        ordered_json list = ordered_json::array();
        for (size_t i = 0; i < moments.h.size(); ++i) {
            ordered_json entry;
            entry["name"] = "h(p^" + std::to_string(i) + ")";
            entry["terms"] = chern_poly_json(moments.h[i]);
            list.push_back(std::move(entry));
        }
        out["moments"] = std::move(list);
        if (cmd.oracle) out["reports"] = reports_json(oracle_reports);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "power moments h(p^i), dimension " << cmd.dimension << ", depth " << depth
                  << "\n";
        for (size_t i = 0; i < moments.h.size(); ++i)
            std::cout << "  h(p^" << i << ") = " << moments.h[i].str() << "\n";
        if (cmd.oracle) print_reports_text(oracle_reports);
    }
    return reports_exit(oracle_reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact chi_y-genus tables and manifold data consistency checks"};
    app.require_subcommand(1);

    TableCommand formula_cmd, taylor_cmd, moments_cmd;
    auto* formula = app.add_subcommand("formula", "chi_y as a polynomial in Chern monomials");
    formula->add_option("dimension", formula_cmd.dimension, "complex dimension n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    formula->add_flag("--json", formula_cmd.json, "machine-readable output");
    formula->add_flag("--oracle", formula_cmd.oracle, "cross-check against direct expansion");

    auto* taylor = app.add_subcommand("taylor", "coefficients a_i of the expansion at y = -1");
    taylor->add_option("dimension", taylor_cmd.dimension, "complex dimension n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    taylor->add_option("k", taylor_cmd.depth, "deepest coefficient (default min(4, n))")
        ->check(CLI::NonNegativeNumber);
    taylor->add_option("--depth", taylor_cmd.depth, "deepest coefficient (default min(4, n))")
        ->check(CLI::NonNegativeNumber);
    taylor->add_flag("--json", taylor_cmd.json, "machine-readable output");
    taylor->add_flag("--oracle", taylor_cmd.oracle, "cross-check against direct expansion");

    auto* moments = app.add_subcommand("moments", "modified power moments h(p^i)");
    moments->add_option("dimension", moments_cmd.dimension, "complex dimension n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    moments->add_option("k", moments_cmd.depth, "deepest moment (default min(4, n))")
        ->check(CLI::NonNegativeNumber);
    moments->add_option("--depth", moments_cmd.depth, "deepest moment (default min(4, n))")
        ->check(CLI::NonNegativeNumber);
    moments->add_flag("--json", moments_cmd.json, "machine-readable output");
    moments->add_flag("--oracle", moments_cmd.oracle, "cross-check against direct expansion");

    struct BatteryCommand {
        std::string file;
        int depth = 4;
        std::string tier;
        bool json = false;
        bool oracle = false;
    } check_cmd, bounds_cmd, localize_cmd;

    auto add_battery = [&](const char* name, const char* help, BatteryCommand& cmd) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", cmd.file, "manifest JSON file")->required();
        sub->add_option("--depth", cmd.depth, "Taylor/moment depth (default 4)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--tier", cmd.tier, "validation tier override: raw|kaehler|mirror");
        sub->add_flag("--json", cmd.json, "machine-readable output");
        sub->add_flag("--oracle", cmd.oracle, "run brute-force cross-checks");
        return sub;
    };
    auto* check = add_battery("check", "validation + minus-one consistency + Betti bounds", check_cmd);
    auto* bounds = add_battery("bounds", "Betti lower bounds and residuals", bounds_cmd);
    auto* localize = add_battery("localize", "Hamiltonian fixed-point obstruction battery", localize_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (formula->parsed()) return run_formula(formula_cmd);
        if (taylor->parsed()) return run_taylor(taylor_cmd);
        if (moments->parsed()) return run_moments(moments_cmd);

        const BatteryCommand& cmd = check->parsed() ? check_cmd
                                    : bounds->parsed() ? bounds_cmd
                                                       : localize_cmd;
        chiy::ManifoldManifest manifest = chiy::load_manifest(cmd.file);
        chiy::CheckOptions options;
        options.depth = cmd.depth;
        options.oracle = cmd.oracle;
        if (!cmd.tier.empty()) options.tier_override = chiy::parse_tier(cmd.tier);

        std::vector<ConstraintReport> reports;
        std::string command;
        if (check->parsed()) {
            command = "check";
            reports = chiy::check_battery(manifest, options);
        } else if (bounds->parsed()) {
            command = "bounds";
            reports = chiy::bounds_battery(manifest, options);
        } else if (localize->parsed()) {
            command = "localize";
            reports = chiy::localize_battery(manifest, options);
        }
        emit_battery(command, manifest, reports, cmd.json);
        return reports_exit(reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
