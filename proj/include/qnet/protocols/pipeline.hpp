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

#include "qnet/channels/storage.hpp"
#include "qnet/dynamics/cable_experiments.hpp"

namespace qnet {

struct PipelineOptions {
  bool storage_decay = true;
  BellOptions bell;
};

// Idle time of the first pair in Q1A/Q1B while the second pair is generated:
// iSWAP transfer plus the full generation sequence.
double first_pair_storage_time(double t_d_ns, const DeviceParams& device, const BellOptions& bell = {});

// Lifetimes of the storage qubits Q1A, Q1B.
StorageLifetimes storage_lifetimes_a(const DeviceParams& device);
StorageLifetimes storage_lifetimes_b(const DeviceParams& device);

struct PurificationPoint {
  double t_d_ns = 0.0;
  double fidelity_first = 0.0;   // stored pair, psi-
  double fidelity_second = 0.0;  // fresh pair, psi-
  double fidelity_post = 0.0;    // ee outcome, psi+
  double success = 0.0;
  double fractional_gain = 0.0;  // (post - second) / second
};

// Two pairs generated in sequence, the first stored in Q1A/Q1B, bit purification
// keeping the ee outcome. Local gates are perfect and instantaneous.
PurificationPoint purification_pipeline(double t_d_ns, const DeviceParams& device,
                                        const PipelineOptions& options = {});

struct ProtocolComparison {
  double t_d_ns = 0.0;
  bool storage_decay = false;
  double fidelity_pre = 0.0;
  double bit_fidelity = 0.0;  // both consistent outcomes
  double bit_success = 0.0;
  double bit_ee_fidelity = 0.0;
  double bit_ee_success = 0.0;
  double phase_fidelity = 0.0;
  double phase_success = 0.0;
  double double_fidelity = 0.0;
  double double_success = 0.0;
};

// Same pair fed to every scheme; with storage decay the k-th oldest pair idles
// for k generation periods.
ProtocolComparison compare_protocols(double t_d_ns, const DeviceParams& device,
                                     const PipelineOptions& options);

}  // namespace qnet
