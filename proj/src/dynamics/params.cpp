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

#include "qnet/dynamics/params.hpp"

#include "qnet/core/errors.hpp"

namespace qnet {

void QubitParams::validate() const {
  if (!(T1_us > 0.0)) throw InvalidArgument(name + ": T1 must be positive");
  if (!(Tphi_us > 0.0)) throw InvalidArgument(name + ": T_phi must be positive");
  if (!(F_g >= 0.0 && F_g <= 1.0) || !(F_e >= 0.0 && F_e <= 1.0)) {
    throw InvalidArgument(name + ": readout visibilities must lie in [0,1]");
  }
}

const std::array<QubitParams, 6>& device_qubits() {
  static const std::array<QubitParams, 6> table{{
      {"Q1A", 6.03, 5.2556, -0.23, 8.9, 1.8, 0.968, 0.940},
      {"Q2A", 6.14, 5.8695, -0.15, 5.7, 3.1, 0.974, 0.927},
      {"Q3A", 6.04, 5.5055, -0.23, 6.3, 2.5, 0.962, 0.926},
      {"Q1B", 6.08, 5.3021, -0.23, 22.1, 2.2, 0.988, 0.936},
      {"Q2B", 6.25, 5.8901, -0.15, 9.2, 3.0, 0.965, 0.939},
      {"Q3B", 6.16, 5.3218, -0.23, 21.1, 1.8, 0.983, 0.939},
  }};
  return table;
}

const QubitParams& device_qubit(std::string_view name) {
  for (const auto& q : device_qubits())
    if (q.name == name) return q;
  throw LabelError("unknown qubit '" + std::string(name) + "'");
}

void CableParams::validate() const {
  if (n_modes < 1 || n_modes % 2 == 0) {
    throw InvalidArgument("cable: number of modes must be odd and >= 1, got " + std::to_string(n_modes));
  }
  if (!(T1r_ns > 0.0)) throw InvalidArgument("cable: T1r must be positive");
  if (mode_dim < 2) throw InvalidArgument("cable: mode truncation must be >= 2");
}

}  // namespace qnet
