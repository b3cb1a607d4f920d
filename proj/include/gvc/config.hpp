#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "gvc/decompose.hpp"
#include "gvc/taxonomy.hpp"
#include "gvc/validate.hpp"

namespace gvc {

// Resolved run configuration. Sources, in order: built-in defaults, the
// file named by GVC_ATLAS_CONFIG, then an explicit --config file.
struct AnalysisConfig {
    TaxonomyThresholds thresholds;
    SizeCutoffs cutoffs;
    Attribution attribution = Attribution::ExportProduct;
    double balance_tolerance = kDefaultBalanceTolerance;

    // Flat key=value view, used by the run manifest and for round-trips.
    std::map<std::string, std::string> to_map() const;
};

// Parses a flat key=value file ('#' comments, blank lines ignored) and
// applies it on top of `base`. Unknown keys or unparsable values throw
// ConfigError with the offending line.
AnalysisConfig load_config_file(const std::filesystem::path& path, const AnalysisConfig& base);

// Defaults, then GVC_ATLAS_CONFIG if set, then `explicit_path` if nonempty.
AnalysisConfig resolve_config(const std::filesystem::path& explicit_path);

} // namespace gvc
