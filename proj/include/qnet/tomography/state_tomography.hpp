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
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qnet/core/types.hpp"
#include "qnet/tomography/readout.hpp"

namespace qnet {

// Pre-measurement rotation on one qubit: "I", "X/2" or "Y/2".
enum class TomoRotation { kI, kX2, kY2 };

TomoRotation parse_tomo_rotation(std::string_view text);
std::string to_string(TomoRotation r);
Eigen::Matrix2cd rotation_matrix(TomoRotation r);

using TomoSetting = std::vector<TomoRotation>;

// All 3^n settings, first qubit slowest.
std::vector<TomoSetting> all_settings(std::size_t n_qubits);

// Outcome label over {g, e}, first qubit leftmost; index uses the usual big-endian order.
std::string outcome_label(std::size_t index, std::size_t n_qubits);

struct MeasurementRecord {
  TomoSetting setting;
  long shots = 0;                     // 0 for an exact (infinite-shot) record
  std::map<std::string, long> counts;
  RealVector measured_probs;          // counts/shots, or exact with readout error
  RealVector corrected_probs;
  RealVector pre_clip_probs;
};

struct MeasurementOptions {
  long shots = 8000;
  std::uint64_t seed = 1;
  bool exact = false;  // use exact probabilities instead of sampling
};

// Born probabilities after the setting's rotations, before readout error.
RealVector born_probabilities(const DensityMatrix& rho, const TomoSetting& setting);

// Rotate, apply the confusion map, sample shots (multinomial), correct readout.
MeasurementRecord simulate_measurement(const DensityMatrix& rho, const TomoSetting& setting,
                                       const VisibilityMatrix& vis, const MeasurementOptions& options);

// Recomputes measured/corrected probabilities of a record from its counts.
void correct_record(MeasurementRecord& record, const VisibilityMatrix& vis);

// Linear inversion over all 3^n settings (least squares in the Pauli basis),
// then projection onto the nearest physical state.
DensityMatrix reconstruct_state(const std::vector<MeasurementRecord>& records,
                                const std::vector<std::string>& labels);

// Measures every setting and reconstructs. Per-setting seeds derive from options.seed.
DensityMatrix state_tomography(const DensityMatrix& rho, const VisibilityMatrix& vis,
                               const MeasurementOptions& options);

nlohmann::json records_to_json(const std::vector<MeasurementRecord>& records);
std::vector<MeasurementRecord> records_from_json(const nlohmann::json& j, const VisibilityMatrix& vis);

}  // namespace qnet
