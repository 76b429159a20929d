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

#include "json.hpp"

namespace qnet {

// Reference closed forms compared against the Kraus / circuit oracle.
struct DiscrepancyEntry {
  std::string topic;
  std::string parameters;
  std::string quantity;
  std::string reference_formula;
  double reference_value = 0.0;
  double oracle_value = 0.0;
  bool agrees = false;
  std::string note;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyEntry> entries;
  std::vector<std::string> findings;

  std::string to_markdown() const;
  nlohmann::json to_json() const;
};

// Covers the one-sided bit/phase-flip mixture weights and the ee-branch phase
// error of the combined damping/phase model on the grid
// eps_d in {0.05, 0.1} x eps_p in {0.02, 0.05}.
DiscrepancyReport build_discrepancy_report(double tol = 1e-12);

}  // namespace qnet
