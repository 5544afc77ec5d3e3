// Copyright 2026 The lbisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace lbisim {

/// Provenance record written next to every output file.
struct RunManifest {
    std::string command;
    std::string input_file;
    std::string input_sha256;  // empty when the command reads no file
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string tool_version;
    std::string timestamp_utc;
};

/// Lowercase hex SHA-256 of the file contents; throws ParseError if unreadable.
std::string sha256_file(const std::filesystem::path &path);

/// ISO 8601, second resolution, e.g. 2026-01-31T12:00:00Z.
std::string utc_timestamp();

std::string manifest_json(const RunManifest &manifest);

/// Writes `<output>.manifest.json`.
std::filesystem::path write_manifest(const std::filesystem::path &output, const RunManifest &manifest);

}  // namespace lbisim
