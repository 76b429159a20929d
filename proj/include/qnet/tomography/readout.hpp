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

#include <vector>

#include "qnet/core/types.hpp"

namespace qnet {

// Readout visibilities of one qubit: F_g = P(report g | g), F_e = P(report e | e).
struct Visibility {
  double F_g = 1.0;
  double F_e = 1.0;

  void validate() const;
  // [[F_g, 1-F_e], [1-F_g, F_e]]
  Eigen::Matrix2d confusion() const;
};

// Per-qubit visibilities, in the qubit order of the measured register.
struct VisibilityMatrix {
  std::vector<Visibility> qubits;

  static VisibilityMatrix perfect(std::size_t n_qubits);
  std::size_t size() const { return qubits.size(); }
  void validate() const;
  // Tensor product of the per-qubit confusion matrices, first qubit most significant.
  Eigen::MatrixXd confusion() const;
};

// Visibilities of the named table qubits (Q1A ... Q3B).
VisibilityMatrix device_visibilities(const std::vector<std::string>& qubit_names);

RealVector apply_confusion(const RealVector& probs, const VisibilityMatrix& vis);

struct CorrectedProbabilities {
  RealVector probs;     // clipped to [0,1] and renormalized
  RealVector pre_clip;  // raw inverse, may leave [0,1]
};

// P = (F_1 x F_2 x ...)^-1 P^M, then clip and renormalize.
CorrectedProbabilities correct_readout(const RealVector& measured, const VisibilityMatrix& vis);

}  // namespace qnet
