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
#include <iosfwd>
#include <string>
#include <vector>

#include "qnet/runner/config.hpp"
#include "qnet/runner/manifest.hpp"

namespace qnet {

// Sweep axis of an experiment ("" when the experiment has none).
std::string experiment_axis(const std::string& experiment);

// Writes the experiment's data files, summary.json, the discrepancy report and
// manifest.json into out_dir.
RunManifest run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir);

// One row per value of the named axis, in config order, into sweep_<axis>.csv.
RunManifest run_sweep(const ExperimentConfig& config, const std::string& axis, const std::filesystem::path& out_dir);

// Summary of a finished run; `target` is an output directory or a manifest file.
void report(const std::filesystem::path& target, std::ostream& out);

}  // namespace qnet
