#include "qfex/io.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace qfex::cli {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& message) {
    throw std::runtime_error("config error: " + message);
}

const json& require_field(const json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end()) {
        config_error(std::string("missing required field '") + name + "'");
    }
    return *it;
}

int require_int(const json& doc, const char* name, int minimum) {
    const json& field = require_field(doc, name);
    if (!field.is_number_integer()) {
        config_error(std::string("field '") + name + "' must be an integer");
    }
    const int value = field.get<int>();
    if (value < minimum) {
        config_error(std::string("field '") + name + "' must be >= " +
                     std::to_string(minimum));
    }
    return value;
}

double require_positive_double(const json& doc, const char* name) {
    const json& field = require_field(doc, name);
    if (!field.is_number()) {
        config_error(std::string("field '") + name + "' must be a number");
    }
    const double value = field.get<double>();
    if (!(value > 0.0)) {
        config_error(std::string("field '") + name + "' must be > 0");
    }
    return value;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("cannot open " + path.string());
    }
    try {
        return json::parse(stream);
    } catch (const json::parse_error& error) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + error.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    stream << content;
    if (!stream) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

ArchitectureSpec spec_from_json(const nlohmann::json& doc) {
    const json& family_field = require_field(doc, "family");
    if (!family_field.is_string()) {
        config_error("field 'family' must be a string");
    }
    ArchitectureFamily family{};
    try {
        family = family_from_string(family_field.get<std::string>());
    } catch (const std::invalid_argument& error) {
        config_error(error.what());
    }
    const int n = require_int(doc, "n", 1);
    int var_depth = 0;
    if (doc.contains("var_depth")) {
        var_depth = require_int(doc, "var_depth", 1);
    }
    return make_spec(family, n, var_depth);
}

nlohmann::json spec_to_json(const ArchitectureSpec& spec) {
    return json{{"family", std::string(to_string(spec.family))},
                {"n", spec.n},
                {"var_depth", spec.var_depth}};
}

TrainRunConfig train_config_from_json(const nlohmann::json& doc) {
    TrainRunConfig config;

    const json& families = require_field(doc, "families");
    if (!families.is_array() || families.empty()) {
        config_error("field 'families' must be a nonempty array of family names");
    }
    for (const json& entry : families) {
        if (!entry.is_string()) {
            config_error("entries of 'families' must be strings");
        }
        try {
            config.families.push_back(family_from_string(entry.get<std::string>()));
        } catch (const std::invalid_argument& error) {
            config_error(error.what());
        }
    }

    config.n = require_int(doc, "n", 1);
    if (doc.contains("var_depth")) {
        config.var_depth = require_int(doc, "var_depth", 1);
    }
    config.epochs = require_int(doc, "epochs", 0);
    config.learning_rate = require_positive_double(doc, "learning_rate");

    const json& seeds = require_field(doc, "seeds");
    if (!seeds.is_array() || seeds.empty()) {
        config_error("field 'seeds' must be a nonempty array of integers");
    }
    for (const json& entry : seeds) {
        if (!entry.is_number_integer() || entry.get<long long>() < 0) {
            config_error("entries of 'seeds' must be nonnegative integers");
        }
        config.seeds.push_back(entry.get<std::uint64_t>());
    }

    if (doc.contains("dataset")) {
        const json& dataset = doc.at("dataset");
        if (!dataset.is_object()) {
            config_error("field 'dataset' must be an object");
        }
        config.num_points = require_int(dataset, "num_points", 2);
    }
    return config;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::array<char, 32> buffer{};
    std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer.data();
}

}  // namespace qfex::cli
