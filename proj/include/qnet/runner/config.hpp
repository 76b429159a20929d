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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qnet/core/errors.hpp"
#include "qnet/core/tolerances.hpp"
#include "qnet/dynamics/cable_experiments.hpp"

namespace qnet {

// Malformed or inconsistent configuration. The CLI exits with code 2.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct ProtectionConfig {
  double t_d_ns = 10.0;  // delay of the generated pair that is protected
  double total_ns = 1400.0;
  double sample_every_ns = 70.0;
  int n_trajectories = 1000;
  double target_free_fidelity = 0.576;
  double gate_depolarizing = 0.0;
};

struct TomographyConfig {
  int repeats = 20;
  double damping_p = 0.2;         // state under test: one-sided damped psi-
  double process_damping = 0.02;  // damping after CZ in the process demo
};

struct VacuumRabiConfig {
  double t_max_ns = 500.0;
  double dt_out_ns = 0.5;
  double T1_eff_us = 2.1;
  double Tphi_us = 3.1;
};

// Parsed experiment configuration. Units at this boundary: frequencies in MHz,
// times in ns, lifetimes in us.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string output_dir;
  DeviceParams device;
  IntegratorOptions integrator;
  Basis basis = Basis::kSingleExcitation;
  std::map<std::string, std::vector<double>> sweep;
  VacuumRabiConfig vacuum_rabi;
  double ringdown_swap_ns = 0.0;  // <= 0: full swap at the device coupling
  bool storage_decay = true;
  ProtectionConfig protection;
  TomographyConfig tomography;
  std::optional<Tolerances> tolerances;

  // section.key -> value as written, after command-line overrides.
  std::map<std::string, std::string> entries;

  // SHA-256 of the canonical "section.key=value" listing.
  std::string hash() const;
  std::string canonical_text() const;
};

const std::vector<std::string>& registered_experiments();

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Re-applies entries after an override such as --seed.
void set_entry(ExperimentConfig& config, const std::string& key, const std::string& value);

}  // namespace qnet
