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

#include "qnet/dynamics/params.hpp"

namespace qnet {

// Inductances in nH, delta in radians.
struct CouplerParams {
  double L_g = 0.2;
  double L_w = 0.1;
  double L_T = 0.62;
  double L_J = 0.0;
  double L_n = 121.0;
  double delta = 0.0;

  void validate() const;
};

// Josephson inductance (nH) of a transmon at frequency f with charging energy E_C,
// from f + E_C = 1/(2 pi sqrt(L_J C)) and C = e^2/(2 E_C).
double infer_junction_inductance(double f_ghz, double charging_ghz);

// Default coupler for a qubit; L_J is inferred from its operating frequency.
CouplerParams default_coupler(const QubitParams& qubit, double charging_ghz = 0.23);

// M = L_g^2 / (2 L_g + L_w + L_T / cos(delta)), nH.
double mutual_inductance(const CouplerParams& cp);

// g_n = (sqrt(w_q w_n) / 2) M / sqrt((L_J + L_g)(L_n + L_g)), rad/ns (signed).
double coupler_strength(const CouplerParams& cp, double f_q_ghz, double f_n_ghz);

struct CouplerMaximum {
  double delta = 0.0;
  double g = 0.0;  // |g|, rad/ns
};

// Largest |g| over delta in [0, pi], avoiding the singular point.
CouplerMaximum max_coupler_strength(CouplerParams cp, double f_q_ghz, double f_n_ghz);

}  // namespace qnet
