#include "gvc/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "gvc/dataset.hpp"
#include "gvc/errors.hpp"

namespace gvc {

namespace {

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) {
        ++begin;
    }
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' ||
                           text[end - 1] == '\r')) {
        --end;
    }
    return std::string(text.substr(begin, end - begin));
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("invalid number for key '" + key + "': '" + value + "'");
    }
    return out;
}

std::uint64_t parse_count(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* begin = value.data();
    const char* end = begin + value.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("invalid integer for key '" + key + "': '" + value + "'");
    }
    return out;
}

void apply_key(AnalysisConfig& config, const std::string& key, const std::string& value) {
    TaxonomyThresholds& t = config.thresholds;
    if (key == "commodities_manuf_dva_max") {
        t.commodities_manuf_dva_max = parse_double(key, value);
    } else if (key == "commodities_backward_small_max") {
        t.commodities_backward_small_max = parse_double(key, value);
    } else if (key == "commodities_backward_medium_max") {
        t.commodities_backward_medium_max = parse_double(key, value);
    } else if (key == "commodities_backward_large_max") {
        t.commodities_backward_large_max = parse_double(key, value);
    } else if (key == "primary_low_max") {
        t.primary_low_max = parse_double(key, value);
    } else if (key == "primary_high_min") {
        t.primary_high_min = parse_double(key, value);
    } else if (key == "innovative_small_ip_min") {
        t.innovative_small_ip_min = parse_double(key, value);
    } else if (key == "innovative_small_rd_min") {
        t.innovative_small_rd_min = parse_double(key, value);
    } else if (key == "innovative_medium_large_ip_min") {
        t.innovative_medium_large_ip_min = parse_double(key, value);
    } else if (key == "innovative_medium_large_rd_min") {
        t.innovative_medium_large_rd_min = parse_double(key, value);
    } else if (key == "advanced_manuf_services_min") {
        t.advanced_manuf_services_min = parse_double(key, value);
    } else if (key == "size_small_max") {
        config.cutoffs.small_max = parse_count(key, value);
    } else if (key == "size_large_min") {
        config.cutoffs.large_min = parse_count(key, value);
    } else if (key == "attribution") {
        if (!parse_attribution(value, config.attribution)) {
            throw ConfigError("invalid attribution mode '" + value + "'");
        }
    } else if (key == "balance_tolerance") {
        config.balance_tolerance = parse_double(key, value);
        if (config.balance_tolerance <= 0.0) {
            throw ConfigError("balance_tolerance must be positive");
        }
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

} // namespace

std::map<std::string, std::string> AnalysisConfig::to_map() const {
    const TaxonomyThresholds& t = thresholds;
    std::map<std::string, std::string> out;
    out["commodities_manuf_dva_max"] = format_value(t.commodities_manuf_dva_max);
    out["commodities_backward_small_max"] = format_value(t.commodities_backward_small_max);
    out["commodities_backward_medium_max"] = format_value(t.commodities_backward_medium_max);
    out["commodities_backward_large_max"] = format_value(t.commodities_backward_large_max);
    out["primary_low_max"] = format_value(t.primary_low_max);
    out["primary_high_min"] = format_value(t.primary_high_min);
    out["innovative_small_ip_min"] = format_value(t.innovative_small_ip_min);
    out["innovative_small_rd_min"] = format_value(t.innovative_small_rd_min);
    out["innovative_medium_large_ip_min"] = format_value(t.innovative_medium_large_ip_min);
    out["innovative_medium_large_rd_min"] = format_value(t.innovative_medium_large_rd_min);
    out["advanced_manuf_services_min"] = format_value(t.advanced_manuf_services_min);
    out["size_small_max"] = std::to_string(cutoffs.small_max);
    out["size_large_min"] = std::to_string(cutoffs.large_min);
    out["attribution"] = std::string(to_string(attribution));
    out["balance_tolerance"] = format_value(balance_tolerance);
    return out;
}

AnalysisConfig load_config_file(const std::filesystem::path& path, const AnalysisConfig& base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    AnalysisConfig config = base;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected key=value");
        }
        apply_key(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

AnalysisConfig resolve_config(const std::filesystem::path& explicit_path) {
    AnalysisConfig config;
    if (const char* env = std::getenv("GVC_ATLAS_CONFIG"); env != nullptr && *env != '\0') {
        config = load_config_file(env, config);
    }
    if (!explicit_path.empty()) {
        config = load_config_file(explicit_path, config);
    }
    return config;
}

} // namespace gvc
