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

#include "qnet/dynamics/cable_system.hpp"

#include <cmath>

#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

namespace {

std::string mode_label(int m) { return "C" + std::to_string(m); }

Matrix local_lowering(std::size_t d) {
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t n = 1; n < d; ++n)
    a(static_cast<Eigen::Index>(n - 1), static_cast<Eigen::Index>(n)) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

CableSystem::CableSystem(CableParams cable, Basis basis) : cable_(cable), basis_(basis) {
  cable_.validate();
  elements_.push_back("Q2A");
  for (int m = 1; m <= cable_.n_modes; ++m) elements_.push_back(mode_label(m));
  elements_.push_back("Q2B");
  if (basis_ == Basis::kFull) {
    std::vector<std::size_t> dims{2};
    for (int m = 0; m < cable_.n_modes; ++m) dims.push_back(cable_.mode_dim);
    dims.push_back(2);
    space_ = CompositeSpace(dims, elements_);
  } else {
    space_ = CompositeSpace({static_cast<std::size_t>(cable_.n_modes) + 3}, {"SE"});
  }
}

bool CableSystem::is_mode(std::string_view label) const {
  return label.size() > 1 && label[0] == 'C';
}

std::size_t CableSystem::se_index(std::string_view label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == label) return i + 1;
  throw LabelError("cable system has no element '" + std::string(label) + "'");
}

Matrix CableSystem::lowering(std::string_view label) const {
  if (basis_ == Basis::kSingleExcitation) {
    const auto n = static_cast<Eigen::Index>(dimension());
    Matrix a = Matrix::Zero(n, n);
    a(0, static_cast<Eigen::Index>(se_index(label))) = 1.0;
    return a;
  }
  const std::vector<std::string> target{std::string(label)};
  return embed(local_lowering(space_.dim_of(target[0])), target, space_).matrix();
}

Matrix CableSystem::number(std::string_view label) const {
  const Matrix a = lowering(label);
  return a.adjoint() * a;
}

Matrix CableSystem::sigma_z(std::string_view label) const {
  if (is_mode(label)) throw LabelError("sigma_z is defined for qubits only");
  const auto n = static_cast<Eigen::Index>(dimension());
  return 2.0 * number(label) - Matrix::Identity(n, n);
}

ComplexOperator CableSystem::hamiltonian(const SegmentControls& c) const {
  const int big_m = cable_.n_modes;
  Matrix h = c.detuning_A * number("Q2A") + c.detuning_B * number("Q2B");
  const Matrix sa = lowering("Q2A");
  const Matrix sb = lowering("Q2B");
  // Lowering operators are written b^dag sigma so the products also hold in
  // the single-excitation basis, where they are |vac><x| projectors.
  for (int m = 1; m <= big_m; ++m) {
    const std::string lbl = mode_label(m);
    const Matrix b = lowering(lbl);
    const double offset = (m - (big_m + 1) / 2.0) * cable_.omega_fsr;
    if (offset != 0.0) h += offset * b.adjoint() * b;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if (c.g_A != 0.0) h += c.g_A * (b.adjoint() * sa + sa.adjoint() * b);
    if (c.g_B != 0.0) h += sign * c.g_B * (b.adjoint() * sb + sb.adjoint() * b);
  }
  const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) throw NumericError("hamiltonian is not Hermitian (" + std::to_string(herm) + ")");
  return {space_, h};
}

ComplexOperator build_hamiltonian(const CableSystem& system, const SegmentControls& controls) {
  return system.hamiltonian(controls);
}

DensityMatrix CableSystem::vacuum() const { return DensityMatrix(PureState::basis(space_, 0)); }

DensityMatrix CableSystem::excited_state(std::string_view label) const {
  const Matrix a = lowering(label);
  const Matrix v = vacuum().matrix();
  return DensityMatrix::from_hermitized(space_, a.adjoint() * v * a);
}

double CableSystem::occupation(const DensityMatrix& rho, std::string_view label) const {
  return (number(label) * rho.matrix()).trace().real();
}

DensityMatrix CableSystem::reduce_to_qubits(const DensityMatrix& rho) const {
  const std::vector<std::string> keep{"Q2A", "Q2B"};
  if (basis_ == Basis::kFull) return partial_trace(rho, keep);

  // Two-qubit order (gg, ge, eg, ee): Q2A excited -> eg, Q2B excited -> ge.
  const auto& r = rho.matrix();
  const Eigen::Index vac = 0;
  const auto ia = static_cast<Eigen::Index>(se_index("Q2A"));
  const auto ib = static_cast<Eigen::Index>(se_index("Q2B"));
  Matrix out = Matrix::Zero(4, 4);
  out(0, 0) = r(vac, vac);
  for (int m = 1; m <= cable_.n_modes; ++m) {
    const auto im = static_cast<Eigen::Index>(se_index(mode_label(m)));
    out(0, 0) += r(im, im);
  }
  const Eigen::Index map[3] = {0, 2, 1};
  const Eigen::Index src[3] = {vac, ia, ib};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 0 || j != 0) out(map[i], map[j]) = r(src[i], src[j]);
  return DensityMatrix::from_hermitized(CompositeSpace::qubits(keep), out);
}

}  // namespace qnet
