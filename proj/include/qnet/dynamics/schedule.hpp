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

#include <string>
#include <vector>

namespace qnet {

// Piecewise-constant controls, angular frequencies in rad/ns.
struct SegmentControls {
  double detuning_A = 0.0;
  double detuning_B = 0.0;
  double g_A = 0.0;
  double g_B = 0.0;

  bool operator==(const SegmentControls&) const = default;
};

struct Segment {
  double duration_ns = 0.0;
  SegmentControls controls;
  std::string name;
};

class PulseSchedule {
 public:
  PulseSchedule& add(double duration_ns, const SegmentControls& controls, std::string name = {});

  const std::vector<Segment>& segments() const { return segments_; }
  double total_duration() const { return total_; }
  bool empty() const { return segments_.empty(); }

 private:
  std::vector<Segment> segments_;
  double total_ = 0.0;
};

}  // namespace qnet
