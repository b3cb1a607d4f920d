#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gvc/config.hpp"

namespace gvc {

// Reproducibility record emitted alongside every command output. The digest
// covers command, config and content hashes (timestamp excluded), so two
// runs over identical inputs produce identical digests.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config;
    std::map<std::string, std::string> input_digests;  // path -> sha256
    std::map<std::string, std::string> output_digests; // path -> sha256
    std::vector<std::string> notes;
    std::string tool;
    std::string version;
    std::string timestamp; // UTC, ISO 8601

    std::string digest() const;
    std::string to_json() const;
};

RunManifest make_manifest(const std::string& command, const AnalysisConfig& config);

// Hashes one file into `input_digests`/`output_digests`, keyed by `label`.
void add_input_file(RunManifest& manifest, const std::string& label,
                    const std::filesystem::path& path);
void add_output_file(RunManifest& manifest, const std::string& label,
                     const std::filesystem::path& path);

// Hashes every regular file under a dataset root (sorted relative paths).
void add_input_dataset(RunManifest& manifest, const std::filesystem::path& root);
void add_output_dataset(RunManifest& manifest, const std::filesystem::path& root);

// Writes `<output_path>.manifest.json`.
std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& output_path);

} // namespace gvc
