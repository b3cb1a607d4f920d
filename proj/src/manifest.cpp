#include "gvc/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "gvc/errors.hpp"
#include "gvc/sha256.hpp"
#include "gvc/version.hpp"

namespace gvc {

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json digest_payload(const RunManifest& m) {
    // Everything identity-relevant, timestamp deliberately excluded.
    nlohmann::json j;
    j["tool"] = m.tool;
    j["version"] = m.version;
    j["command"] = m.command;
    j["config"] = m.config;
    j["inputs"] = m.input_digests;
    j["outputs"] = m.output_digests;
    j["notes"] = m.notes;
    return j;
}

void add_dataset_files(RunManifest& manifest, const std::filesystem::path& root, bool as_input) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        const std::string label = file.lexically_relative(root).generic_string();
        if (as_input) {
            add_input_file(manifest, label, file);
        } else {
            add_output_file(manifest, label, file);
        }
    }
}

} // namespace

std::string RunManifest::digest() const {
    return sha256_hex(digest_payload(*this).dump());
}

std::string RunManifest::to_json() const {
    nlohmann::json j = digest_payload(*this);
    j["digest"] = digest();
    j["timestamp"] = timestamp;
    return j.dump(2) + "\n";
}

RunManifest make_manifest(const std::string& command, const AnalysisConfig& config) {
    RunManifest manifest;
    manifest.command = command;
    manifest.config = config.to_map();
    manifest.tool = kToolName;
    manifest.version = kToolVersion;
    manifest.timestamp = utc_now();
    return manifest;
}

void add_input_file(RunManifest& manifest, const std::string& label,
                    const std::filesystem::path& path) {
    manifest.input_digests[label] = sha256_file(path);
}

void add_output_file(RunManifest& manifest, const std::string& label,
                     const std::filesystem::path& path) {
    manifest.output_digests[label] = sha256_file(path);
}

void add_input_dataset(RunManifest& manifest, const std::filesystem::path& root) {
    add_dataset_files(manifest, root, true);
}

void add_output_dataset(RunManifest& manifest, const std::filesystem::path& root) {
    add_dataset_files(manifest, root, false);
}

std::filesystem::path write_manifest(const RunManifest& manifest,
                                     const std::filesystem::path& output_path) {
    std::filesystem::path target = output_path;
    target += ".manifest.json";
    std::ofstream out(target, std::ios::binary);
    if (!out) {
        throw IoError("cannot write manifest '" + target.string() + "'");
    }
    out << manifest.to_json();
    return target;
}

} // namespace gvc
