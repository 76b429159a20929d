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

#include "qnet/dynamics/coupler.hpp"

#include <cmath>
#include <numbers>

#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

constexpr double kElectronCharge = 1.602176634e-19;
constexpr double kPlanck = 6.62607015e-34;

}  // namespace

void CouplerParams::validate() const {
  if (!(L_g > 0.0 && L_w > 0.0 && L_T > 0.0 && L_J > 0.0 && L_n > 0.0)) {
    throw InvalidArgument("coupler: all inductances must be positive");
  }
  if (std::abs(std::cos(delta)) < 1e-6) {
    throw SingularCouplerError("coupler: cos(delta) is zero, L_T/cos(delta) diverges");
  }
}

double infer_junction_inductance(double f_ghz, double charging_ghz) {
  if (!(f_ghz > 0.0 && charging_ghz > 0.0)) throw InvalidArgument("L_J inference needs f > 0, E_C > 0");
  const double ec_joule = kPlanck * charging_ghz * 1e9;
  const double capacitance = kElectronCharge * kElectronCharge / (2.0 * ec_joule);
  const double omega = kTwoPi * (f_ghz + charging_ghz) * 1e9;
  return 1e9 / (omega * omega * capacitance);
}

CouplerParams default_coupler(const QubitParams& qubit, double charging_ghz) {
  CouplerParams cp;
  cp.L_J = infer_junction_inductance(qubit.f_eg_ghz, charging_ghz);
  return cp;
}

double mutual_inductance(const CouplerParams& cp) {
  cp.validate();
  return cp.L_g * cp.L_g / (2.0 * cp.L_g + cp.L_w + cp.L_T / std::cos(cp.delta));
}

double coupler_strength(const CouplerParams& cp, double f_q_ghz, double f_n_ghz) {
  const double m = mutual_inductance(cp);
  const double wq = ghz_to_angular(f_q_ghz);
  const double wn = ghz_to_angular(f_n_ghz);
  return 0.5 * std::sqrt(wq * wn) * m / std::sqrt((cp.L_J + cp.L_g) * (cp.L_n + cp.L_g));
}

CouplerMaximum max_coupler_strength(CouplerParams cp, double f_q_ghz, double f_n_ghz) {
  CouplerMaximum best;
  constexpr int kSteps = 20000;
  for (int i = 0; i <= kSteps; ++i) {
    cp.delta = std::numbers::pi * i / kSteps;
    if (std::abs(std::cos(cp.delta)) < 1e-3) continue;
    const double g = std::abs(coupler_strength(cp, f_q_ghz, f_n_ghz));
    if (g > best.g) best = {cp.delta, g};
  }
  return best;
}

}  // namespace qnet
