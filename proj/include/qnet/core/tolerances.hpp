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

namespace qnet {

/// Numerical tolerances used by validation throughout the library.
///
/// Defaults are process-wide; the experiment runner may replace them once at
/// startup (`set_default_tolerances`) before any worker threads exist.
struct Tolerances {
  double hermiticity = 1e-10;      // max |A - A^dagger| entry
  double trace = 1e-10;            // |tr(rho) - 1|
  double min_eigenvalue = -1e-9;   // smallest admissible eigenvalue
  double pure_norm = 1e-12;        // |‖psi‖ - 1|
  double completeness = 1e-10;     // max |sum E^dagger E - I| entry
  double unitarity = 1e-10;        // max |U^dagger U - I| entry
  double fidelity_clamp = 1e-9;    // slack before a fidelity outside [0,1] is an error
  double probability_sum = 1e-9;   // corrected probabilities summing to 1
  double chi_trace = 1e-9;         // trace of a process chi matrix

  static const Tolerances& defaults();
};

void set_default_tolerances(const Tolerances& tol);

}  // namespace qnet
