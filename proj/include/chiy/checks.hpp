// Constraint batteries behind the CLI commands: tier validation, the
// minus-one consistency battery, the Betti-bound checks, and the Hamiltonian
// obstruction battery, assembled from a parsed manifest.
#pragma once

#include "chiy/constraints.hpp"
#include "chiy/manifest.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chiy {

struct CheckOptions {
    std::optional<ValidationTier> tier_override;
    int depth = 4;        // Taylor/moment depth (clamped to the dimension)
    bool oracle = false;  // run the brute-force cross-checks where defined
};

/// Tier-appropriate diamond validation + minus-one consistency + the
/// applicable Betti-bound constraints for the claimed structure.
std::vector<ConstraintReport> check_battery(const ManifoldManifest& manifest,
                                            const CheckOptions& options = {});

/// All Betti-bound values and statuses (Salamon residual, c1*c(n-1) bound,
/// Calabi-Yau residual, c2*c(n-2) bound) regardless of the claimed structure.
/// Requires Betti data (explicit or from a diamond).
std::vector<ConstraintReport> bounds_battery(const ManifoldManifest& manifest,
                                             const CheckOptions& options = {});

/// The Hamiltonian-action obstruction battery; requires fixed-point data.
std::vector<ConstraintReport> localize_battery(const ManifoldManifest& manifest,
                                               const CheckOptions& options = {});

/// Pipeline formula versus the direct multivariate expansion at dimension n
/// (capped at n <= 8; larger n reports not-applicable).
ConstraintReport oracle_formula_report(int n);

}  // namespace chiy
