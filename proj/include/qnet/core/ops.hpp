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

#include <span>
#include <string>
#include <vector>

#include "qnet/core/kraus_channel.hpp"
#include "qnet/core/types.hpp"

namespace qnet {

/// Kronecker product; the left factor is the slower-varying index.
ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b);
PureState tensor_product(const PureState& a, const PureState& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Lifts `op` (whose dims match the target subsystems, in the order given)
/// to `full_space`, acting as identity on every other subsystem.
ComplexOperator embed(const ComplexOperator& op, std::span<const std::string> target_labels,
                      const CompositeSpace& full_space);
ComplexOperator embed(const Matrix& op, std::span<const std::string> target_labels,
                      const CompositeSpace& full_space);

/// Reorders subsystems so that the result's labels follow `order`.
ComplexOperator permute(const ComplexOperator& op, std::span<const std::string> order);
DensityMatrix permute(const DensityMatrix& rho, std::span<const std::string> order);

/// Traces out everything not listed in `keep_labels`; kept subsystems appear
/// in the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep_labels);
/// Raw variant for operators that need not be physical.
ComplexOperator partial_trace(const ComplexOperator& op, std::span<const std::string> keep_labels);

/// <target|rho|target>, clamped to [0,1] within the fidelity tolerance.
double state_fidelity(const DensityMatrix& rho, const PureState& target);
/// Unclamped <psi|A|psi>.
Complex expectation(const ComplexOperator& op, const PureState& psi);

/// sum_i E_i rho E_i^dagger with the channel acting on `targets`.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            std::span<const std::string> targets);
ComplexOperator apply_channel(const ComplexOperator& rho, const KrausChannel& ch,
                              std::span<const std::string> targets);

/// U rho U^dagger with U acting on `targets`.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u,
                            std::span<const std::string> targets);
ComplexOperator apply_unitary(const ComplexOperator& rho, const Matrix& u,
                              std::span<const std::string> targets);

/// Symmetrize, clip negative eigenvalues, renormalize. Deterministic.
DensityMatrix nearest_physical_state(const ComplexOperator& h);

/// Trace distance 1/2 ‖a - b‖_1.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 between mixed states.
double uhlmann_fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qnet
