#include "visorlab/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "visorlab/cli/verify.hpp"

namespace visorlab::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> known, std::string_view where) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (std::string_view k : known) {
            found = found || item.key() == k;
        }
        if (!found) {
            throw ConfigError("config: unknown key '" + item.key() + "' in " + std::string(where));
        }
    }
}

double number(const json& value, std::string_view name) {
    if (!value.is_number()) {
        throw ConfigError("config: '" + std::string(name) + "' must be a number");
    }
    return value.get<double>();
}

std::int64_t integer(const json& value, std::string_view name) {
    if (!value.is_number_integer()) {
        throw ConfigError("config: '" + std::string(name) + "' must be an integer");
    }
    return value.get<std::int64_t>();
}

}  // namespace

void RunConfig::validate() const {
    try {
        card.validate();
    } catch (const ArgumentError& e) {
        throw ConfigError(e.what());
    }
    if (samples < 2) {
        throw ConfigError("config: samples must be at least 2");
    }
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (tolerance && !positive(*tolerance)) {
        throw ConfigError("config: tolerance must be positive");
    }
    const auto names = verification_check_names();
    for (const auto& [name, value] : tolerances) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw ConfigError("config: no verification check named '" + name + "'");
        }
        if (!positive(value)) {
            throw ConfigError("config: tolerance for '" + name + "' must be positive");
        }
    }
    if (alphas_deg) {
        for (double a : *alphas_deg) {
            if (!(a >= 0.0 && a <= 180.0)) {
                throw ConfigError("config: fold angles must lie in [0, 180] degrees");
            }
        }
    }
}

RunConfig parse_config(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: JSON parse error: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    reject_unknown_keys(root, {"card", "samples", "grid", "tolerance", "tolerances", "output", "alphas"}, "config");

    RunConfig config;
    if (root.contains("card")) {
        const json& card = root.at("card");
        if (!card.is_object()) {
            throw ConfigError("config: 'card' must be an object");
        }
        reject_unknown_keys(card, {"circle_radius_mm", "rib_count", "card_width_mm", "card_height_mm", "margin_mm"},
                            "card");
        if (card.contains("circle_radius_mm")) {
            config.card.circle_radius_mm = number(card.at("circle_radius_mm"), "circle_radius_mm");
        }
        if (card.contains("rib_count")) {
            const std::int64_t ribs = integer(card.at("rib_count"), "rib_count");
            if (ribs < 0 || ribs > 100000) {
                throw ConfigError("config: rib_count out of range");
            }
            config.card.rib_count = static_cast<int>(ribs);
        }
        if (card.contains("card_width_mm")) {
            config.card.card_width_mm = number(card.at("card_width_mm"), "card_width_mm");
        }
        if (card.contains("card_height_mm")) {
            config.card.card_height_mm = number(card.at("card_height_mm"), "card_height_mm");
        }
        if (card.contains("margin_mm")) {
            config.card.margin_mm = number(card.at("margin_mm"), "margin_mm");
        }
    }
    if (root.contains("samples")) {
        const std::int64_t samples = integer(root.at("samples"), "samples");
        if (samples < 0) {
            throw ConfigError("config: samples must be at least 2");
        }
        config.samples = static_cast<std::size_t>(samples);
    }
    if (root.contains("grid")) {
        if (!root.at("grid").is_string()) {
            throw ConfigError("config: 'grid' must be a string");
        }
        try {
            config.grid = parse_grid(root.at("grid").get<std::string>());
        } catch (const ArgumentError& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (root.contains("tolerance")) {
        config.tolerance = number(root.at("tolerance"), "tolerance");
    }
    if (root.contains("tolerances")) {
        const json& tol = root.at("tolerances");
        if (!tol.is_object()) {
            throw ConfigError("config: 'tolerances' must be an object");
        }
        for (const auto& item : tol.items()) {
            config.tolerances[item.key()] = number(item.value(), item.key());
        }
    }
    if (root.contains("output")) {
        if (!root.at("output").is_string()) {
            throw ConfigError("config: 'output' must be a string");
        }
        config.output = root.at("output").get<std::string>();
    }
    if (root.contains("alphas")) {
        const json& alphas = root.at("alphas");
        if (!alphas.is_array()) {
            throw ConfigError("config: 'alphas' must be an array of degrees");
        }
        std::vector<double> values;
        for (const json& a : alphas) {
            values.push_back(number(a, "alphas[]"));
        }
        config.alphas_deg = std::move(values);
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config: cannot open '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::filesystem::path output_directory(const RunConfig& config) {
    if (!config.output.empty()) {
        return config.output;
    }
    if (const char* env = std::getenv("VISORLAB_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

}  // namespace visorlab::cli
