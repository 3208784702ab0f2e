#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfex/arch.hpp"

namespace qfex::cli {

/// Shortest round-trip decimal form (std::to_chars); NaN prints as "nan".
std::string format_double(double value);

/// Parses a JSON document, wrapping file and syntax errors with the path.
nlohmann::json read_json_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

/// {family, n, var_depth?} with field-level validation. A missing or zero
/// var_depth selects the family default.
ArchitectureSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const ArchitectureSpec& spec);

struct TrainRunConfig {
    std::vector<ArchitectureFamily> families;
    int n = 2;
    int var_depth = 0;  // 0 = per-family default
    int epochs = 200;
    double learning_rate = 0.1;
    std::vector<std::uint64_t> seeds;
    int num_points = 100;
};

TrainRunConfig train_config_from_json(const nlohmann::json& doc);

/// ISO-8601 UTC, second resolution. Only ever written to the manifest.
std::string timestamp_utc();

}  // namespace qfex::cli
