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

#include "qnet/dynamics/schedule.hpp"

#include <cmath>

#include "qnet/core/errors.hpp"

namespace qnet {

PulseSchedule& PulseSchedule::add(double duration_ns, const SegmentControls& controls,
                                  std::string name) {
  if (!(duration_ns > 0.0) || !std::isfinite(duration_ns)) {
    throw InvalidArgument("pulse segment '" + name + "': duration must be positive");
  }
  segments_.push_back({duration_ns, controls, std::move(name)});
  total_ += duration_ns;
  return *this;
}

}  // namespace qnet
