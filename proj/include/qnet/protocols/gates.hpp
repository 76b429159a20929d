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

struct GateOp {
  std::string name;
  ComplexOperator unitary;
  std::vector<std::string> targets;
  double duration_ns = 0.0;
};

// I, X, Y, Z, X/2, Y/2, -X/2, -Y/2 (rotations exp(-i theta sigma/2)), iSWAP, CZ.
// Without targets the gate acts on placeholder labels q0[, q1].
GateOp standard_gate(std::string_view name);
GateOp standard_gate(std::string_view name, std::vector<std::string> targets);

// Application order: -Y/2 on target, CZ, Y/2 on target. The product is CNOT exactly.
std::vector<GateOp> compose_cnot(const std::string& control, const std::string& target);

// CNOT on (control, target) in the (gg, ge, eg, ee) basis.
Matrix cnot_matrix();

// Product of the gates in application order, embedded in the given space.
ComplexOperator circuit_unitary(const std::vector<GateOp>& gates, const CompositeSpace& space);

ComplexOperator apply_gates(const ComplexOperator& rho, const std::vector<GateOp>& gates);
DensityMatrix apply_gates(const DensityMatrix& rho, const std::vector<GateOp>& gates);

}  // namespace qnet
