#ifndef SCHOTTKY_CONFIG_IO_HPP
#define SCHOTTKY_CONFIG_IO_HPP

#include <filesystem>
#include <string>

#include "schottky/schottky_group.hpp"

// Flat JSON serialization of a Schottky configuration:
//
// {
//   "metadata": { "name": "...", "description": "..." },   // optional
//   "chains": [
//     { "center_zeta": [re, im], "center_v": v, "lambda": [re, im] },
//     ...
//   ]
// }
//
// At least two chains, all numbers finite, lambda nonzero.

namespace schottky {

struct ConfigMetadata {
    std::string name;
    std::string description;
};

struct NamedConfig {
    SchottkyConfig config;
    ConfigMetadata metadata;
};

// Parse a configuration document.  Throws parse_error with a diagnostic on
// JSON syntax errors and schema violations.
NamedConfig parse_config(const std::string& json_text);

// Read and parse a configuration file; parse_error also covers unreadable
// paths.
NamedConfig load_config(const std::filesystem::path& path);

// Serialize with full (17 significant digit) precision, so a write/read
// round trip reproduces the configuration bit for bit.
std::string config_to_json(const SchottkyConfig& cfg, const ConfigMetadata& metadata = {});

void save_config(const SchottkyConfig& cfg, const std::filesystem::path& path,
    const ConfigMetadata& metadata = {});

} // namespace schottky

#endif
