#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conifold/dubrovin.hpp"
#include "conifold/integral_structure.hpp"
#include "conifold/lattice.hpp"

namespace conifold {

struct FrobeniusBlock {
    LoopOptions loop;
};

struct KDataBlock {
    KClassData data;
    std::size_t node = 0; // 0-based node the spherical object corresponds to
};

struct ClusterBlock {
    std::vector<std::complex<double>> central_charges;
    std::complex<double> z{1.0, 0.0};
};

/// Parsed configuration file.
///
/// Schema: { "rank": n, "pairing": [[..]], "cycles": [[..]],
///           "frobenius"?: {...}, "kdata"?: {...}, "cluster"?: {...} }.
/// Rationals are JSON integers or "p/q" strings; floats are rejected.
/// Complex numbers are two-element arrays [re, im].
struct DegenerationConfig {
    CycleConfig cycles;
    std::optional<FrobeniusBlock> frobenius;
    std::optional<KDataBlock> kdata;
    std::optional<ClusterBlock> cluster;
    /// Parsed document, used for hashing.
    nlohmann::json source;
};

DegenerationConfig parse_config(const nlohmann::json& doc);
DegenerationConfig parse_config_text(const std::string& text);
DegenerationConfig load_config(const std::filesystem::path& path);

Rational parse_rational_json(const nlohmann::json& value, const std::string& field);
std::complex<double> parse_complex_json(const nlohmann::json& value, const std::string& field);
/// "re,im" or "re" as used on the command line.
std::complex<double> parse_complex_text(const std::string& text);

/// Inverse of parse_config for the exact blocks (lattice and cycles).
nlohmann::json config_to_json(const CycleConfig& config);

/// FNV-1a 64 of the canonical dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& doc);

} // namespace conifold
