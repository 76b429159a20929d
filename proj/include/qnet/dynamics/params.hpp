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

#include <array>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>

namespace qnet {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// GHz -> rad/ns and MHz -> rad/ns.
inline constexpr double ghz_to_angular(double f_ghz) { return kTwoPi * f_ghz; }
inline constexpr double mhz_to_angular(double f_mhz) { return kTwoPi * f_mhz * 1e-3; }
inline constexpr double angular_to_mhz(double w) { return w / kTwoPi * 1e3; }
inline constexpr double us_to_ns(double t_us) { return t_us * 1e3; }

struct QubitParams {
  std::string name;
  double f_eg_max_ghz = 0.0;
  double f_eg_ghz = 0.0;
  double eta_ghz = 0.0;
  double T1_us = 0.0;
  double Tphi_us = 0.0;
  double F_g = 1.0;
  double F_e = 1.0;

  double T1_ns() const { return us_to_ns(T1_us); }
  double Tphi_ns() const { return us_to_ns(Tphi_us); }
  void validate() const;
};

// Device table for Q1A, Q2A, Q3A, Q1B, Q2B, Q3B.
const std::array<QubitParams, 6>& device_qubits();
const QubitParams& device_qubit(std::string_view name);

struct CableParams {
  int n_modes = 3;
  double omega_fsr = mhz_to_angular(105.0);
  double T1r_ns = 477.3;
  std::size_t mode_dim = 2;

  void validate() const;
};

// Frequency of the cable mode used for communication.
inline constexpr double kCommunicationModeGhz = 5.806;

}  // namespace qnet
