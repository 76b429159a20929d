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

#include <functional>
#include <string>
#include <vector>

#include "qnet/core/types.hpp"
#include "qnet/tomography/state_tomography.hpp"

namespace qnet {

// chi in the Pauli-string basis {I,X,Y,Z}^n (first qubit slowest), with
// E(rho) = sum_mn chi_mn P_m rho P_n. Trace 1 for trace-preserving maps.
struct ChiMatrix {
  std::size_t n_qubits = 0;
  Matrix entries;

  std::string basis_label(std::size_t index) const;
  double trace_error() const;
  double hermiticity_error() const;
  RealVector eigenvalues() const;
};

using ProcessMap = std::function<DensityMatrix(const DensityMatrix&)>;

// Preparation gates applied to |g...g>: "I", "X", "X/2", "Y/2".
std::vector<std::string> preparation_gates();

struct ProcessTomographyOptions {
  VisibilityMatrix vis;        // empty: perfect readout
  MeasurementOptions measurement{8000, 1, true};
};

// State tomography on the 4^n prepared inputs, then linear inversion to chi.
ChiMatrix process_tomography(const ProcessMap& process, const std::vector<std::string>& labels,
                             const ProcessTomographyOptions& options = {});

// Direct chi of a unitary, chi_mn = u_m conj(u_n) with u_m = Tr(P_m U)/2^n.
ChiMatrix chi_of_unitary(const Matrix& u);

// Re Tr(chi_ideal chi_exp), clamped to [0,1].
double process_fidelity(const ChiMatrix& chi_ideal, const ChiMatrix& chi_exp);

nlohmann::json to_json(const ChiMatrix& chi);

}  // namespace qnet
