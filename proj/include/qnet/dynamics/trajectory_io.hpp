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

#include <ostream>
#include <string>
#include <vector>

#include "qnet/dynamics/cable_system.hpp"
#include "qnet/dynamics/lindblad.hpp"

namespace qnet {

// Header "t_ns,<obs>..." with observables named "Pe:<element>", e.g. "Pe:Q2A", "Pe:C2".
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const CableSystem& system,
                          const std::vector<std::string>& observables);

}  // namespace qnet
