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
#include <ostream>
#include <vector>

#include "qnet/core/types.hpp"

namespace qnet {

// Per-trajectory Gaussian detunings, independent per qubit, constant over the window.
struct QuasiStaticNoise {
  double sigma = 0.0;  // rad/ns
  int n_trajectories = 1000;
  std::uint64_t seed = 1;

  void validate() const;

  // sigma whose single-qubit Ramsey envelope is exp(-(t/T_phi)^2).
  static double sigma_from_dephasing_time(double Tphi_ns);
};

struct ProtectionParams {
  double total_time_ns = 1400.0;
  double sample_every_ns = 70.0;  // one DD cycle
  double T1_A_ns = 5700.0;
  double T1_B_ns = 9200.0;
  // DD cycle: two slots of 30 ns gate + 5 ns buffer, X pulses centred in each slot.
  double dd_slot_ns = 35.0;
  double dd_pulse_offset_ns = 15.0;
  double gate_depolarizing = 0.0;  // per X gate, per qubit
  int threads = 1;

  void validate() const;
};

struct ProtectionSeries {
  std::vector<double> t_ns;
  std::vector<double> fidelity_mean;
  std::vector<double> fidelity_stderr;
  std::vector<Matrix> mean_state;
  int n_traj = 0;
};

// Fidelities are taken against psi- on the labels of rho0.
ProtectionSeries protect_free(const DensityMatrix& rho0, const QuasiStaticNoise& noise,
                              const ProtectionParams& params);
ProtectionSeries protect_dd(const DensityMatrix& rho0, const QuasiStaticNoise& noise,
                            const ProtectionParams& params);
// Continuous drive (Omega/2)(X (x) I + I (x) X) during storage.
ProtectionSeries protect_rabi(const DensityMatrix& rho0, double omega, const QuasiStaticNoise& noise,
                              const ProtectionParams& params);

// Bisection on sigma so the free-evolution mean fidelity at t_ns equals target.
// The same trajectory seeds are used for every trial sigma.
double calibrate_sigma(const DensityMatrix& rho0, double target_fidelity, double t_ns,
                       QuasiStaticNoise noise, ProtectionParams params);

// 2 / decay rate of |rho_eg,ge| of the mean state, from a log-linear fit.
double effective_t2(const ProtectionSeries& series);

void write_protection_csv(std::ostream& out, const ProtectionSeries& series);

}  // namespace qnet
