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

#include "qnet/protocols/gates.hpp"

#include <cmath>

#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

namespace {

const Complex kI(0.0, 1.0);

Matrix pauli(char axis) {
  Matrix m = Matrix::Zero(2, 2);
  switch (axis) {
    case 'X': m(0, 1) = m(1, 0) = 1.0; break;
    case 'Y': m(0, 1) = -kI; m(1, 0) = kI; break;
    case 'Z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: m = Matrix::Identity(2, 2);
  }
  return m;
}

// exp(-i theta sigma / 2)
Matrix rotation(char axis, double theta) {
  return std::cos(theta / 2.0) * Matrix::Identity(2, 2) - kI * std::sin(theta / 2.0) * pauli(axis);
}

struct GateSpec {
  Matrix u;
  double duration_ns;
};

GateSpec lookup(std::string_view name) {
  const double half_pi = std::acos(0.0);
  if (name == "I") return {Matrix::Identity(2, 2), 0.0};
  if (name == "X" || name == "Y" || name == "Z") return {pauli(name[0]), 30.0};
  if (name == "X/2") return {rotation('X', half_pi), 20.0};
  if (name == "Y/2") return {rotation('Y', half_pi), 20.0};
  if (name == "-X/2") return {rotation('X', -half_pi), 20.0};
  if (name == "-Y/2") return {rotation('Y', -half_pi), 20.0};
  if (name == "iSWAP") {
    Matrix u = Matrix::Zero(4, 4);
    u(0, 0) = u(3, 3) = 1.0;
    u(1, 2) = u(2, 1) = -kI;
    return {u, 15.0};
  }
  if (name == "CZ") {
    Matrix u = Matrix::Identity(4, 4);
    u(3, 3) = -1.0;
    return {u, 21.0};
  }
  throw InvalidArgument("unknown gate '" + std::string(name) + "'");
}

}  // namespace

GateOp standard_gate(std::string_view name) {
  const auto spec = lookup(name);
  std::vector<std::string> targets{"q0"};
  if (spec.u.rows() == 4) targets.push_back("q1");
  return standard_gate(name, std::move(targets));
}

GateOp standard_gate(std::string_view name, std::vector<std::string> targets) {
  auto spec = lookup(name);
  const std::size_t arity = spec.u.rows() == 4 ? 2 : 1;
  if (targets.size() != arity) {
    throw LabelError("gate '" + std::string(name) + "' acts on " + std::to_string(arity) + " qubit(s)");
  }
  auto space = CompositeSpace::qubits(targets);
  return {std::string(name), ComplexOperator(std::move(space), std::move(spec.u)), std::move(targets),
          spec.duration_ns};
}

std::vector<GateOp> compose_cnot(const std::string& control, const std::string& target) {
  if (control == target) throw LabelError("compose_cnot: control and target are both '" + control + "'");
  return {standard_gate("-Y/2", {target}), standard_gate("CZ", {control, target}),
          standard_gate("Y/2", {target})};
}

Matrix cnot_matrix() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = 1.0;
  u(2, 3) = u(3, 2) = 1.0;
  return u;
}

ComplexOperator circuit_unitary(const std::vector<GateOp>& gates, const CompositeSpace& space) {
  Matrix total = Matrix::Identity(static_cast<Eigen::Index>(space.dimension()),
                                  static_cast<Eigen::Index>(space.dimension()));
  for (const auto& g : gates) total = embed(g.unitary.matrix(), g.targets, space).matrix() * total;
  return {space, total};
}

ComplexOperator apply_gates(const ComplexOperator& rho, const std::vector<GateOp>& gates) {
  ComplexOperator out = rho;
  for (const auto& g : gates) out = apply_unitary(out, g.unitary.matrix(), g.targets);
  return out;
}

DensityMatrix apply_gates(const DensityMatrix& rho, const std::vector<GateOp>& gates) {
  return DensityMatrix::from_hermitized(rho.space(), apply_gates(rho.as_operator(), gates).matrix());
}

}  // namespace qnet
