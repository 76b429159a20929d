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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/core/types.hpp"
#include "qnet/protocols/gates.hpp"

namespace qnet {

enum class Scheme { kBit, kPhase, kDoubleSelection };
enum class Selection { kGG, kEE, kBothConsistent };

Scheme parse_scheme(std::string_view text);
Selection parse_selection(std::string_view text);
std::string to_string(Scheme scheme);
std::string to_string(Selection selection);

// One measurement record of the ancilla qubits (0 = g, 1 = e, in measured-label order).
struct Branch {
  std::vector<int> bits;
  double probability = 0.0;
  std::optional<ComplexOperator> state;  // normalized kept-pair state, absent when probability ~ 0
};

struct PurificationOutcome {
  DensityMatrix post_state;  // over (Q2A, Q2B)
  double success_prob = 0.0;
  double fidelity = 0.0;     // overlap with the ideal-input post-state
  std::string selection;
  PureState target;
};

// Same result on unchecked operators, so that non-physical analytic inputs can
// still be pushed through the circuit.
struct RawOutcome {
  ComplexOperator post_state;
  double success_prob = 0.0;
  double fidelity = 0.0;
  PureState target;
};

// Pair layout: bit and phase keep rho2 on (Q2A, Q2B) as control and measure rho1
// on (Q1A, Q1B). Double selection keeps rho3 on (Q2A, Q2B), checks bits with
// rho2 on (Q1A, Q1B) and phases with rho1 on (Q3A, Q3B).
std::vector<GateOp> purification_circuit(Scheme scheme);
std::vector<std::string> measured_labels(Scheme scheme);

// Every ancilla outcome of the circuit; probabilities sum to the input trace.
std::vector<Branch> purification_branches(const std::vector<ComplexOperator>& pairs, Scheme scheme);

// Outcomes kept by a selection: literal all-g / all-e records, or every record
// reachable from ideal psi- inputs.
std::vector<std::vector<int>> selected_outcomes(Scheme scheme, Selection selection);

// Kept-pair state the circuit produces from ideal psi- inputs under the selection.
PureState purification_target(Scheme scheme, Selection selection);

PurificationOutcome purify(const DensityMatrix& rho1, const DensityMatrix& rho2, Scheme scheme,
                           Selection selection);
PurificationOutcome purify_double_selection(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                            const DensityMatrix& rho3);

RawOutcome purify_raw(const ComplexOperator& rho1, const ComplexOperator& rho2, Scheme scheme,
                      Selection selection);

}  // namespace qnet
