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
#include <span>
#include <string>
#include <vector>

#include "qnet/core/types.hpp"
#include "qnet/dynamics/schedule.hpp"

namespace qnet {

struct CollapseTerm {
  ComplexOperator op;
  double rate = 0.0;  // 1/ns
  std::string name;
};

class CollapseSet {
 public:
  CollapseSet& add(ComplexOperator op, double rate, std::string name = {});
  const std::vector<CollapseTerm>& terms() const { return terms_; }

 private:
  std::vector<CollapseTerm> terms_;
};

struct Generator {
  ComplexOperator hamiltonian;
  CollapseSet collapse;
};

using GeneratorBuilder = std::function<Generator(const SegmentControls&)>;

struct IntegratorOptions {
  double dt_ns = 0.05;
  // Re-run at dt/2 and fail if any grid state moves by more than the tolerance.
  bool richardson_check = false;
  double richardson_tol = 1e-6;
  // Largest negative eigenvalue / trace drift repaired by projection onto the state set.
  double cleanup_tol = 1e-6;
};

struct Trajectory {
  std::vector<double> t_ns;
  std::vector<DensityMatrix> states;
  double richardson_error = 0.0;  // max entry change under step halving (if checked)
};

// d rho/dt = -i[H, rho] + sum_k rate_k (L rho L^dag - {L^dag L, rho}/2), fixed-step RK4.
// Steps never straddle segment boundaries or grid points.
Trajectory lindblad_evolve(const PulseSchedule& schedule, const GeneratorBuilder& builder,
                           const DensityMatrix& rho0, std::span<const double> t_grid,
                           const IntegratorOptions& options = {});

Trajectory lindblad_evolve(const Generator& generator, const DensityMatrix& rho0,
                           std::span<const double> t_grid, const IntegratorOptions& options = {});

// State at the end of the schedule.
DensityMatrix lindblad_final(const PulseSchedule& schedule, const GeneratorBuilder& builder,
                             const DensityMatrix& rho0, const IntegratorOptions& options = {});

}  // namespace qnet
