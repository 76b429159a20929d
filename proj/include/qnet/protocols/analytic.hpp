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

#include "qnet/channels/error_channels.hpp"
#include "qnet/core/types.hpp"
#include "qnet/protocols/purification.hpp"

namespace qnet {

// F' = F^2 / (F^2 + (1-F)^2).
double analytic_purified_fidelity(double F);

// One-sided amplitude damping with strength p, bit purification.
struct DampedClosedForm {
  Matrix post_state;  // 4x4 over (Q2A, Q2B)
  double fidelity = 0.0;
  double success = 0.0;
};
DampedClosedForm analytic_damped_postselect(double p, Selection selection);

// Combined damping/phase error state, bit purification, closed forms.
struct CombinedClosedForm {
  Matrix post_state;
  double fidelity = 0.0;
  double success = 0.0;
  double eps_p_prime = 0.0;   // ee branch phase error
  double ground_population = 0.0;
};
CombinedClosedForm analytic_combined_postselect(const ErrorParams& params, Selection selection);

// The alternative ee-branch phase error quoted alongside the impure-state model,
// (2 eps_p^2 - 2 eps_p + 2 eps_d) / (1 - 2 eps_d).
double alternative_ee_phase_error(const ErrorParams& params);

}  // namespace qnet
