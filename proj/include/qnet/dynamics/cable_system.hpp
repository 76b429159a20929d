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
#include "qnet/dynamics/params.hpp"
#include "qnet/dynamics/schedule.hpp"

namespace qnet {

enum class Basis {
  kFull,              // Q2A (x) C1 .. CM (x) Q2B tensor space
  kSingleExcitation,  // {vac, Q2A, C1 .. CM, Q2B}
};

// Two communication qubits Q2A, Q2B coupled to M standing cable modes, in the
// frame rotating at the communication-mode frequency.
class CableSystem {
 public:
  CableSystem(CableParams cable, Basis basis);

  const CableParams& cable() const { return cable_; }
  Basis basis() const { return basis_; }
  const CompositeSpace& space() const { return space_; }
  std::size_t dimension() const { return space_.dimension(); }

  // "Q2A", "Q2B", "C1" .. "CM".
  const std::vector<std::string>& element_labels() const { return elements_; }
  bool is_mode(std::string_view label) const;

  Matrix lowering(std::string_view label) const;
  Matrix number(std::string_view label) const;
  Matrix sigma_z(std::string_view label) const;

  ComplexOperator hamiltonian(const SegmentControls& controls) const;

  // Q2A excited, everything else empty.
  DensityMatrix excited_state(std::string_view label) const;
  DensityMatrix vacuum() const;

  // Excited population of a qubit or mean occupation of a mode.
  double occupation(const DensityMatrix& rho, std::string_view label) const;

  // Reduced state over (Q2A, Q2B).
  DensityMatrix reduce_to_qubits(const DensityMatrix& rho) const;

 private:
  std::size_t se_index(std::string_view label) const;

  CableParams cable_;
  Basis basis_;
  CompositeSpace space_;
  std::vector<std::string> elements_;
};

ComplexOperator build_hamiltonian(const CableSystem& system, const SegmentControls& controls);

}  // namespace qnet
