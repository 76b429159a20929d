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

#include "qnet/channels/bell.hpp"

#include <algorithm>
#include <cmath>

#include "qnet/core/errors.hpp"

namespace qnet {

BellLabel parse_bell_label(std::string_view text) {
  if (text == "psi+" || text == "ψ+" || text == "ψ⁺") return BellLabel::kPsiPlus;
  if (text == "psi-" || text == "ψ-" || text == "ψ−" || text == "ψ⁻") return BellLabel::kPsiMinus;
  if (text == "phi+" || text == "φ+" || text == "φ⁺") return BellLabel::kPhiPlus;
  if (text == "phi-" || text == "φ-" || text == "φ−" || text == "φ⁻") return BellLabel::kPhiMinus;
  throw InvalidArgument("unknown Bell state label '" + std::string(text) + "'");
}

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::kPsiPlus: return "psi+";
    case BellLabel::kPsiMinus: return "psi-";
    case BellLabel::kPhiPlus: return "phi+";
    case BellLabel::kPhiMinus: return "phi-";
  }
  return "?";
}

PureState bell_state(BellLabel label, const std::vector<std::string>& labels) {
  if (labels.size() != 2) throw LabelError("bell_state needs exactly two labels");
  const double s = 1.0 / std::sqrt(2.0);
  Vector v = Vector::Zero(4);
  switch (label) {
    case BellLabel::kPsiPlus: v(2) = s; v(1) = s; break;
    case BellLabel::kPsiMinus: v(2) = s; v(1) = -s; break;
    case BellLabel::kPhiPlus: v(0) = s; v(3) = s; break;
    case BellLabel::kPhiMinus: v(0) = s; v(3) = -s; break;
  }
  return {CompositeSpace::qubits(labels), v};
}

BellWeights bell_weights(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("bell_weights: expected 4x4");
  auto w = [&](BellLabel l) {
    const Vector v = bell_state(l).amplitudes();
    return v.dot(rho * v).real();
  };
  return {w(BellLabel::kPsiPlus), w(BellLabel::kPsiMinus), w(BellLabel::kPhiPlus),
          w(BellLabel::kPhiMinus)};
}

InfidelitySplit infidelity_split(const Matrix& rho, BellLabel target) {
  if (rho.rows() != 4 || rho.cols() != 4) throw DimensionError("infidelity_split: expected 4x4");
  if (target != BellLabel::kPsiMinus && target != BellLabel::kPsiPlus) {
    throw InvalidArgument("infidelity_split: target must be psi+ or psi-");
  }
  const Vector v = bell_state(target).amplitudes();
  const double fidelity = v.dot(rho * v).real();
  const double p_ge = rho(1, 1).real();
  const double p_eg = rho(2, 2).real();
  const double f_damp = 0.5 * (p_ge + p_eg) + std::sqrt(std::max(0.0, p_ge * p_eg));
  InfidelitySplit s;
  s.infidelity = 1.0 - fidelity;
  s.damping = 1.0 - f_damp;
  s.phase = f_damp - fidelity;
  s.damping_fraction = s.infidelity > 0.0 ? s.damping / s.infidelity : 0.0;
  return s;
}

}  // namespace qnet
