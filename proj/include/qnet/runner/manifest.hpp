// Copyright 2026 The qnetsim Authors
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
#include <vector>

#include "json.hpp"

namespace qnet {

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

struct ManifestFile {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  std::string experiment;
  std::string config_hash;
  std::string library_version;
  std::uint64_t seed = 0;
  std::vector<ManifestFile> files;
  double elapsed_s = 0.0;  // the only non-deterministic field

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

RunManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

// Paths whose checksum no longer matches (or which are missing).
std::vector<std::string> verify_manifest(const RunManifest& manifest, const std::filesystem::path& out_dir);

}  // namespace qnet
