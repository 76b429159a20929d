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

#include "qnet/core/kraus_channel.hpp"
#include "qnet/core/types.hpp"

namespace qnet {

// Idle decay of a stored qubit: Markovian T1 and a Gaussian dephasing
// envelope exp(-(t/T_phi)^2) on the coherences.
struct StorageLifetimes {
  double T1_ns = 0.0;
  double Tphi_ns = 0.0;
};

KrausChannel storage_damping(double t_ns, double T1_ns);
KrausChannel storage_dephasing(double t_ns, double Tphi_ns);

// Applies both lifetimes to each qubit of a two-qubit state.
DensityMatrix store_pair(const DensityMatrix& rho, double t_ns, const StorageLifetimes& a,
                         const StorageLifetimes& b);

}  // namespace qnet
