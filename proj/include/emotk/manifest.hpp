#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace emotk {

inline constexpr const char* kToolkitVersion = "1.0.0";

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

/// Provenance record written next to every output. Contains nothing
/// time- or host-dependent, so identical runs produce identical manifests.
struct RunManifest {
    std::string subcommand;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    std::map<std::string, std::string> input_digests;  // path -> sha256
    std::vector<std::string> output_paths;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::string toolkit_version = kToolkitVersion;

    void add_input(const std::filesystem::path& path) { input_digests[path.string()] = sha256_file(path); }

    std::string to_json() const;
};

/// `<output>.manifest.json`
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

}  // namespace emotk
