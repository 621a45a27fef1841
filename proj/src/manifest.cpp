#include "chiy/manifest.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chiy {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(StructureClaim claim) {
    switch (claim) {
        case StructureClaim::AlmostComplex: return "almost-complex";
        case StructureClaim::Kaehler: return "kaehler";
        case StructureClaim::CalabiYau: return "calabi-yau";
        case StructureClaim::Mirror: return "mirror";
        case StructureClaim::HyperKaehler: return "hyperkaehler";
    }
    return "?";
}

StructureClaim parse_structure(const std::string& name) {
    if (name == "almost-complex") return StructureClaim::AlmostComplex;
    if (name == "kaehler") return StructureClaim::Kaehler;
    if (name == "calabi-yau") return StructureClaim::CalabiYau;
    if (name == "mirror") return StructureClaim::Mirror;
    if (name == "hyperkaehler") return StructureClaim::HyperKaehler;
    throw std::invalid_argument("unknown structure \"" + name + "\"");
}

ValidationTier tier_for(StructureClaim claim) {
    switch (claim) {
        case StructureClaim::AlmostComplex: return ValidationTier::Raw;
        case StructureClaim::Kaehler:
        case StructureClaim::CalabiYau: return ValidationTier::Kaehler;
        case StructureClaim::Mirror:
        case StructureClaim::HyperKaehler: return ValidationTier::Mirror;
    }
    return ValidationTier::Raw;
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

long long integer_at(const json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where + " must be an integer");
    return value.get<long long>();
}

Rational rational_at(const json& value, const std::string& where) {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_string()) {
        try {
            return Rational::parse(value.get<std::string>());
        } catch (const std::exception&) {
            fail(where + ": malformed rational \"" + value.get<std::string>() + "\"");
        }
    }
    fail(where + " must be an integer or a \"p/q\" string");
}

HodgeDiamond parse_hodge(const json& value, int n) {
    std::vector<std::vector<long long>> rows;
    if (value.is_string()) {
        // plain text diamond: one row per q, space-separated entries
        std::istringstream in(value.get<std::string>());
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream fields(line);
            std::vector<long long> row;
            long long h = 0;
            while (fields >> h) row.push_back(h);
            if (!fields.eof()) fail("hodge: malformed diamond row \"" + line + "\"");
            rows.push_back(std::move(row));
        }
    } else if (value.is_array()) {
        for (const auto& row_json : value) {
            if (!row_json.is_array()) fail("hodge rows must be arrays");
            std::vector<long long> row;
            for (const auto& entry : row_json) row.push_back(integer_at(entry, "hodge entry"));
            rows.push_back(std::move(row));
        }
    } else {
        fail("hodge must be an array of rows or a diamond text block");
    }
    size_t side = static_cast<size_t>(n) + 1;
    if (rows.size() != side) fail("diamond shape must be (n+1)x(n+1)");
    for (const auto& row : rows) {
        if (row.size() != side) fail("diamond shape must be (n+1)x(n+1)");
        for (long long h : row) {
            if (h < 0) fail("hodge entries must be nonnegative");
        }
    }
    return HodgeDiamond(n, std::move(rows));
}

FixedPointData parse_fixed_points(const json& value, int n) {
    if (!value.is_object()) fail("fixed_points must be an object");
    bool has_weights = value.contains("weights");
    bool has_indices = value.contains("indices");
    if (has_weights == has_indices)
        fail("fixed_points needs exactly one of \"weights\" or \"indices\"");
    for (const auto& [key, unused] : value.items()) {
        if (key != "weights" && key != "indices") fail("fixed_points: unknown field \"" + key + "\"");
    }
    std::vector<FixedPoint> points;
    try {
        if (has_indices) {
            const json& list = value.at("indices");
            if (!list.is_array()) fail("fixed_points.indices must be an array");
            for (const auto& entry : list)
                points.emplace_back(static_cast<int>(integer_at(entry, "fixed point index")));
        } else {
            const json& list = value.at("weights");
            if (!list.is_array()) fail("fixed_points.weights must be an array of arrays");
            for (const auto& row : list) {
                if (!row.is_array()) fail("fixed_points.weights must be an array of arrays");
                std::vector<Rational> weights;
                for (const auto& entry : row) weights.push_back(rational_at(entry, "weight"));
                points.emplace_back(std::move(weights));
            }
        }
        return FixedPointData(n, std::move(points));
    } catch (const std::domain_error& e) {
        fail(std::string("fixed_points: ") + e.what());
    }
}

}  // namespace

ManifoldManifest parse_manifest(const std::string& document) {
    json root = json::parse(document, nullptr, false);
    if (root.is_discarded()) fail("manifest is not valid JSON");
    if (!root.is_object()) fail("manifest must be a JSON object");

    static const char* known[] = {"name",  "dimension", "structure",
                                  "chern", "hodge",     "betti",
                                  "fixed_points"};
    for (const auto& [key, unused] : root.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail("unknown manifest field \"" + key + "\"");
    }

    if (!root.contains("dimension")) fail("missing dimension");
    long long n_raw = integer_at(root.at("dimension"), "dimension");
    if (n_raw < 0) fail("dimension must be nonnegative");
    int n = static_cast<int>(n_raw);

    ManifoldManifest m;
    m.dimension = n;
    if (root.contains("name")) {
        if (!root.at("name").is_string()) fail("name must be a string");
        m.name = root.at("name").get<std::string>();
    }
    if (root.contains("structure")) {
        if (!root.at("structure").is_string()) fail("structure must be a string");
        m.structure = parse_structure(root.at("structure").get<std::string>());
        m.structure_explicit = true;
    }
    if (root.contains("chern")) {
        const json& chern_json = root.at("chern");
        if (!chern_json.is_object()) fail("chern must be an object of partition keys");
        ChernNumbers chern(n);
        for (const auto& [key, value] : chern_json.items()) {
            Partition index;
            try {
                index = Partition::parse(key);
            } catch (const std::exception&) {
                fail("malformed partition key \"" + key + "\"");
            }
            if (index.weight() != n)
                fail("partition weight " + std::to_string(index.weight()) + " != dimension " +
                     std::to_string(n) + " for key \"" + key + "\"");
            chern.set(index, integer_at(value, "chern value for \"" + key + "\""));
        }
        m.chern = std::move(chern);
    }
    if (root.contains("hodge")) m.hodge = parse_hodge(root.at("hodge"), n);
    if (root.contains("betti")) {
        const json& betti_json = root.at("betti");
        if (!betti_json.is_array()) fail("betti must be an array");
        std::vector<long long> entries;
        for (const auto& entry : betti_json) entries.push_back(integer_at(entry, "betti entry"));
        if (entries.size() != static_cast<size_t>(2 * n) + 1)
            fail("betti length must be 2n+1 = " + std::to_string(2 * n + 1));
        for (long long b : entries) {
            if (b < 0) fail("betti entries must be nonnegative");
        }
        m.betti = BettiVector(std::move(entries));
        m.betti_explicit = true;
    }
    if (m.hodge) {
        BettiVector derived = betti_from_diamond(*m.hodge);
        if (m.betti) {
            if (!(derived == *m.betti)) fail("hodge/betti disagreement");
        } else {
            m.betti = std::move(derived);
        }
    }
    if (root.contains("fixed_points")) m.fixed_points = parse_fixed_points(root.at("fixed_points"), n);

    if (!m.chern && !m.hodge && !m.betti && !m.fixed_points)
        fail("manifest needs at least one of chern/hodge/betti/fixed_points");
    return m;
}

ManifoldManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read manifest file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_manifest(buffer.str());
}

std::string serialize_manifest(const ManifoldManifest& m) {
    ordered_json out;
    out["name"] = m.name;
    out["dimension"] = m.dimension;
    if (m.structure_explicit) out["structure"] = to_string(m.structure);
    if (m.chern) {
        ordered_json chern = ordered_json::object();
        for (const auto& [index, value] : m.chern->values()) chern[index.key()] = value;
        out["chern"] = std::move(chern);
    }
    if (m.hodge) out["hodge"] = m.hodge->rows();
    if (m.betti) out["betti"] = m.betti->entries();
    if (m.fixed_points) {
        ordered_json fp = ordered_json::object();
        bool all_weights = true;
        for (const auto& point : m.fixed_points->points()) all_weights &= point.weights().has_value();
        if (all_weights) {
            ordered_json rows = ordered_json::array();
            for (const auto& point : m.fixed_points->points()) {
                ordered_json row = ordered_json::array();
                for (const Rational& w : *point.weights()) {
                    if (w.is_integer())
                        row.push_back(w.numerator().get_si());
                    else
                        row.push_back(w.str());
                }
                rows.push_back(std::move(row));
            }
            fp["weights"] = std::move(rows);
        } else {
            fp["indices"] = morse_indices(*m.fixed_points);
        }
        out["fixed_points"] = std::move(fp);
    }
    return out.dump(2);
}

}  // namespace chiy
