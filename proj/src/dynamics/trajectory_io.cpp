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

#include "qnet/dynamics/trajectory_io.hpp"

#include <iomanip>

#include "qnet/core/errors.hpp"

namespace qnet {

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const CableSystem& system,
                          const std::vector<std::string>& observables) {
  std::vector<std::string> elements;
  for (const auto& name : observables) {
    if (name.rfind("Pe:", 0) != 0) throw InvalidArgument("unknown observable '" + name + "'");
    elements.push_back(name.substr(3));
  }
  out << "t_ns";
  for (const auto& name : observables) out << ',' << name;
  out << '\n' << std::setprecision(12);
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    out << traj.t_ns[i];
    for (const auto& e : elements) out << ',' << system.occupation(traj.states[i], e);
    out << '\n';
  }
}

}  // namespace qnet
