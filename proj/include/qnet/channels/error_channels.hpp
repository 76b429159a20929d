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

#include "qnet/core/kraus_channel.hpp"
#include "qnet/core/types.hpp"

namespace qnet {

enum class ChannelKind { kBitFlip, kPhaseFlip, kAmplitudeDamping };

ChannelKind parse_channel_kind(std::string_view text);
std::string to_string(ChannelKind kind);

// Two-operator single-qubit channels:
//   bit flip          {sqrt(1-p) I, sqrt(p) X}
//   phase flip        {sqrt(1-p) I, sqrt(p) Z}
//   amplitude damping {diag(1, sqrt(1-p)), sqrt(p) |g><e|}
KrausChannel make_channel(ChannelKind kind, double p);

KrausChannel::Report channel_validate(const KrausChannel& ch,
                                      double tol = Tolerances::defaults().completeness);

// Channel applied to qubit B of |psi-><psi-| over labels (A, B).
DensityMatrix one_sided_bell_error(ChannelKind kind, double p);

struct ErrorParams {
  double p = 0.0;
  double eps_d = 0.0;
  double eps_p = 0.0;

  void validate() const;
};

// (1-eps_p)|psi-><psi-| + eps_p|psi+><psi+| + eps_d(|gg><gg| - |ge><ge|), unchecked.
// Positive semidefinite only when eps_p(1-eps_p) >= eps_d/2.
ComplexOperator combined_error_operator(const ErrorParams& params);

// Same operator, rejected with NonPhysicalStateError when it has a negative eigenvalue.
DensityMatrix combined_error_bell(const ErrorParams& params);

bool combined_error_is_physical(const ErrorParams& params);

}  // namespace qnet
