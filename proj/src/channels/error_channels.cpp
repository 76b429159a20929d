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

#include "qnet/channels/error_channels.hpp"

#include <cmath>
#include <sstream>

#include "qnet/channels/bell.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << what << " = " << p << " outside [0,1]";
    throw InvalidArgument(os.str());
  }
}

}  // namespace

ChannelKind parse_channel_kind(std::string_view text) {
  if (text == "bit_flip") return ChannelKind::kBitFlip;
  if (text == "phase_flip") return ChannelKind::kPhaseFlip;
  if (text == "amplitude_damping") return ChannelKind::kAmplitudeDamping;
  throw InvalidArgument("unknown channel kind '" + std::string(text) + "'");
}

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kBitFlip: return "bit_flip";
    case ChannelKind::kPhaseFlip: return "phase_flip";
    case ChannelKind::kAmplitudeDamping: return "amplitude_damping";
  }
  return "?";
}

KrausChannel make_channel(ChannelKind kind, double p) {
  check_probability(p, "channel probability");
  Matrix e0 = Matrix::Zero(2, 2);
  Matrix e1 = Matrix::Zero(2, 2);
  switch (kind) {
    case ChannelKind::kBitFlip:
      e0 = std::sqrt(1.0 - p) * Matrix::Identity(2, 2);
      e1(0, 1) = e1(1, 0) = std::sqrt(p);
      break;
    case ChannelKind::kPhaseFlip:
      e0 = std::sqrt(1.0 - p) * Matrix::Identity(2, 2);
      e1(0, 0) = std::sqrt(p);
      e1(1, 1) = -std::sqrt(p);
      break;
    case ChannelKind::kAmplitudeDamping:
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(1.0 - p);
      e1(0, 1) = std::sqrt(p);
      break;
  }
  return {to_string(kind), {2}, {e0, e1}};
}

KrausChannel::Report channel_validate(const KrausChannel& ch, double tol) { return ch.validate(tol); }

DensityMatrix one_sided_bell_error(ChannelKind kind, double p) {
  const DensityMatrix ideal(bell_state(BellLabel::kPsiMinus));
  const std::vector<std::string> target{"B"};
  return apply_channel(ideal, make_channel(kind, p), target);
}

void ErrorParams::validate() const {
  check_probability(p, "p");
  if (!(eps_d >= 0.0 && eps_d < 0.5)) {
    throw InvalidArgument("eps_d = " + std::to_string(eps_d) + " outside [0, 0.5)");
  }
  if (!(eps_p >= 0.0 && eps_p < 0.5)) {
    throw InvalidArgument("eps_p = " + std::to_string(eps_p) + " outside [0, 0.5)");
  }
}

ComplexOperator combined_error_operator(const ErrorParams& params) {
  params.validate();
  const Matrix minus = bell_state(BellLabel::kPsiMinus).projector().matrix();
  const Matrix plus = bell_state(BellLabel::kPsiPlus).projector().matrix();
  Matrix m = (1.0 - params.eps_p) * minus + params.eps_p * plus;
  m(0, 0) += params.eps_d;
  m(1, 1) -= params.eps_d;
  return {CompositeSpace::qubits({"A", "B"}), m};
}

bool combined_error_is_physical(const ErrorParams& params) {
  return check_physical(combined_error_operator(params).matrix()).ok;
}

DensityMatrix combined_error_bell(const ErrorParams& params) {
  const auto op = combined_error_operator(params);
  const auto report = check_physical(op.matrix());
  if (!report.ok) {
    std::ostringstream os;
    os << "combined error state with eps_d=" << params.eps_d << ", eps_p=" << params.eps_p
       << " is not positive semidefinite (min eigenvalue " << report.min_eigenvalue
       << "; requires eps_p(1-eps_p) >= eps_d/2)";
    throw NonPhysicalStateError(os.str());
  }
  return DensityMatrix(op);
}

}  // namespace qnet
