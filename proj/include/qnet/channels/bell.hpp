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
#include <string_view>
#include <vector>

#include "qnet/core/types.hpp"

namespace qnet {

enum class BellLabel { kPsiPlus, kPsiMinus, kPhiPlus, kPhiMinus };

// Accepts "psi+", "psi-", "phi+", "phi-" and the Greek spellings.
BellLabel parse_bell_label(std::string_view text);
std::string to_string(BellLabel label);

// psi(+/-) = (|eg> +/- |ge>)/sqrt2, phi(+/-) = (|gg> +/- |ee>)/sqrt2.
PureState bell_state(BellLabel label, const std::vector<std::string>& labels = {"A", "B"});

struct BellWeights {
  double psi_plus = 0.0;
  double psi_minus = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
};

// Diagonal of a two-qubit operator in the Bell basis.
BellWeights bell_weights(const Matrix& rho);

// Splits 1 - <psi|rho|psi> for psi = psi(+/-). The damping part is the
// infidelity of the best state with the same populations whose single-excitation
// block is pure (coherence sqrt(P_eg P_ge)); the phase part is the remainder,
// i.e. coherence lost beyond what the populations force.
struct InfidelitySplit {
  double infidelity = 0.0;
  double damping = 0.0;
  double phase = 0.0;
  double damping_fraction = 0.0;
};

InfidelitySplit infidelity_split(const Matrix& rho, BellLabel target = BellLabel::kPsiMinus);

}  // namespace qnet
