// Manifold manifests: the JSON input document of the CLI.
#pragma once

#include "chiy/genus.hpp"
#include "chiy/hodge.hpp"
#include "chiy/localization.hpp"

#include <optional>
#include <string>

namespace chiy {

enum class StructureClaim { AlmostComplex, Kaehler, CalabiYau, Mirror, HyperKaehler };

const char* to_string(StructureClaim claim);
StructureClaim parse_structure(const std::string& name);
/// Validation tier matching a claimed structure.
ValidationTier tier_for(StructureClaim claim);

/// Parsed and validated manifest. At least one of chern/hodge/betti/
/// fixed_points is present and all dimensions agree; betti is derived from
/// hodge when only the diamond is given.
struct ManifoldManifest {
    std::string name;
    int dimension = 0;
    StructureClaim structure = StructureClaim::AlmostComplex;
    bool structure_explicit = false;
    std::optional<ChernNumbers> chern;
    std::optional<HodgeDiamond> hodge;
    std::optional<BettiVector> betti;
    bool betti_explicit = false;
    std::optional<FixedPointData> fixed_points;

    bool operator==(const ManifoldManifest& o) const {
        return name == o.name && dimension == o.dimension && structure == o.structure &&
               chern == o.chern && hodge == o.hodge && betti == o.betti &&
               fixed_points == o.fixed_points;
    }
};

/// Parses a manifest document. Throws std::invalid_argument with a diagnostic
/// on any malformed input (missing dimension, bad partition key, shape or
/// dimension mismatches, hodge/betti disagreement, ...).
ManifoldManifest parse_manifest(const std::string& document);

/// Reads and parses a manifest file; throws std::invalid_argument on an
/// unreadable file.
ManifoldManifest load_manifest(const std::string& path);

/// Canonical JSON rendering; parse(serialize(m)) == m for valid manifests.
/// Rationals appear as "p/q" strings, never floats.
std::string serialize_manifest(const ManifoldManifest& manifest);

}  // namespace chiy
