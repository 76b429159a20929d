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

#include "qnet/protocols/purification.hpp"

#include <cmath>
#include <map>

#include "qnet/channels/bell.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

namespace {

constexpr double kZeroProbability = 1e-14;

const std::vector<std::string> kKept{"Q2A", "Q2B"};

std::vector<std::vector<std::string>> pair_labels(Scheme scheme) {
  if (scheme == Scheme::kDoubleSelection) return {{"Q2A", "Q2B"}, {"Q1A", "Q1B"}, {"Q3A", "Q3B"}};
  return {{"Q2A", "Q2B"}, {"Q1A", "Q1B"}};
}

void append(std::vector<GateOp>& to, const std::vector<GateOp>& more) { to.insert(to.end(), more.begin(), more.end()); }

void bilateral_cnot(std::vector<GateOp>& gates, const std::string& ca, const std::string& cb,
                    const std::string& ta, const std::string& tb) {
  append(gates, compose_cnot(ca, ta));
  append(gates, compose_cnot(cb, tb));
}

Matrix projector_bit(int bit) {
  Matrix p = Matrix::Zero(2, 2);
  p(bit, bit) = 1.0;
  return p;
}

std::vector<std::vector<int>> all_records(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((k >> (n - 1 - i)) & 1U);
    out.push_back(std::move(bits));
  }
  return out;
}

ComplexOperator ideal_pair() { return bell_state(BellLabel::kPsiMinus).projector(); }

// Weighted sum of the selected branch states, and the total weight.
std::pair<Matrix, double> aggregate(const std::vector<Branch>& branches,
                                    const std::vector<std::vector<int>>& keep) {
  Matrix sum = Matrix::Zero(4, 4);
  double weight = 0.0;
  for (const auto& b : branches) {
    bool selected = false;
    for (const auto& k : keep) selected = selected || (k == b.bits);
    if (!selected) continue;
    weight += b.probability;
    if (b.state) sum += b.probability * b.state->matrix();
  }
  return {sum, weight};
}

std::vector<ComplexOperator> ideal_inputs(Scheme scheme) {
  return std::vector<ComplexOperator>(scheme == Scheme::kDoubleSelection ? 3 : 2, ideal_pair());
}

}  // namespace

Scheme parse_scheme(std::string_view text) {
  if (text == "bit") return Scheme::kBit;
  if (text == "phase") return Scheme::kPhase;
  if (text == "double" || text == "double-selection") return Scheme::kDoubleSelection;
  throw InvalidArgument("unknown purification scheme '" + std::string(text) + "'");
}

Selection parse_selection(std::string_view text) {
  if (text == "gg") return Selection::kGG;
  if (text == "ee") return Selection::kEE;
  if (text == "both" || text == "both-consistent") return Selection::kBothConsistent;
  throw InvalidArgument("unknown selection '" + std::string(text) + "'");
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kBit: return "bit";
    case Scheme::kPhase: return "phase";
    case Scheme::kDoubleSelection: return "double-selection";
  }
  return "?";
}

std::string to_string(Selection selection) {
  switch (selection) {
    case Selection::kGG: return "gg";
    case Selection::kEE: return "ee";
    case Selection::kBothConsistent: return "both-consistent";
  }
  return "?";
}

std::vector<GateOp> purification_circuit(Scheme scheme) {
  std::vector<GateOp> gates;
  switch (scheme) {
    case Scheme::kBit:
      bilateral_cnot(gates, "Q2A", "Q2B", "Q1A", "Q1B");
      break;
    case Scheme::kPhase:
      for (const char* q : {"Q2A", "Q2B", "Q1A", "Q1B"}) gates.push_back(standard_gate("Y/2", {q}));
      bilateral_cnot(gates, "Q2A", "Q2B", "Q1A", "Q1B");
      gates.push_back(standard_gate("-Y/2", {"Q2A"}));
      gates.push_back(standard_gate("-Y/2", {"Q2B"}));
      break;
    case Scheme::kDoubleSelection:
      bilateral_cnot(gates, "Q2A", "Q2B", "Q1A", "Q1B");
      bilateral_cnot(gates, "Q3A", "Q3B", "Q1A", "Q1B");
      gates.push_back(standard_gate("-Y/2", {"Q3A"}));
      gates.push_back(standard_gate("-Y/2", {"Q3B"}));
      break;
  }
  return gates;
}

std::vector<std::string> measured_labels(Scheme scheme) {
  if (scheme == Scheme::kDoubleSelection) return {"Q1A", "Q1B", "Q3A", "Q3B"};
  return {"Q1A", "Q1B"};
}

std::vector<Branch> purification_branches(const std::vector<ComplexOperator>& pairs, Scheme scheme) {
  const auto labels = pair_labels(scheme);
  if (pairs.size() != labels.size()) {
    throw InvalidArgument(to_string(scheme) + " purification needs " + std::to_string(labels.size()) + " pairs");
  }
  std::optional<ComplexOperator> rho;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].space().dims() != std::vector<std::size_t>{2, 2}) {
      throw DimensionError("purification inputs must be two-qubit states");
    }
    auto p = pairs[i].relabeled(CompositeSpace::qubits(labels[i]));
    rho = rho ? tensor_product(*rho, p) : p;
  }
  const ComplexOperator evolved = apply_gates(*rho, purification_circuit(scheme));
  const auto measured = measured_labels(scheme);

  std::vector<Branch> out;
  for (auto& bits : all_records(measured.size())) {
    Matrix projected = evolved.matrix();
    for (std::size_t i = 0; i < measured.size(); ++i) {
      const std::vector<std::string> target{measured[i]};
      const Matrix p = embed(projector_bit(bits[i]), target, evolved.space()).matrix();
      projected = p * projected * p;
    }
    const auto reduced = partial_trace(ComplexOperator(evolved.space(), projected), kKept);
    Branch b;
    b.bits = bits;
    b.probability = reduced.trace().real();
    if (std::abs(b.probability) > kZeroProbability) b.state = reduced.scaled(1.0 / b.probability);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<std::vector<int>> selected_outcomes(Scheme scheme, Selection selection) {
  const std::size_t n = measured_labels(scheme).size();
  std::vector<std::vector<int>> consistent;
  for (const auto& b : purification_branches(ideal_inputs(scheme), scheme))
    if (b.probability > 1e-12) consistent.push_back(b.bits);
  if (selection == Selection::kBothConsistent) return consistent;
  const std::vector<int> literal(n, selection == Selection::kEE ? 1 : 0);
  for (const auto& c : consistent)
    if (c == literal) return {literal};
  throw InvalidArgument(to_string(selection) + " is not a consistent outcome of " + to_string(scheme) +
                        " purification");
}

PureState purification_target(Scheme scheme, Selection selection) {
  const auto keep = selected_outcomes(scheme, selection);
  const auto [sum, weight] = aggregate(purification_branches(ideal_inputs(scheme), scheme), keep);
  const Matrix rho = sum / weight;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()));
  if (es.eigenvalues()(3) < 1.0 - 1e-9) {
    throw NumericError("ideal-input post-state of " + to_string(scheme) + " is not pure");
  }
  Vector v = es.eigenvectors().col(3);
  // Fix the global phase on the largest amplitude for reproducible output.
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  v *= std::conj(v(k)) / std::abs(v(k));
  return PureState::normalized(CompositeSpace::qubits(kKept), v);
}

RawOutcome purify_raw(const ComplexOperator& rho1, const ComplexOperator& rho2, Scheme scheme,
                      Selection selection) {
  if (scheme == Scheme::kDoubleSelection) throw InvalidArgument("purify_raw: use the two-pair schemes");
  const auto branches = purification_branches({rho2, rho1}, scheme);
  const auto keep = selected_outcomes(scheme, selection);
  const auto [sum, weight] = aggregate(branches, keep);
  if (!(std::abs(weight) > kZeroProbability)) {
    throw DegenerateInputError("selected purification outcome has zero probability; post-state undefined");
  }
  auto target = purification_target(scheme, selection);
  ComplexOperator post(CompositeSpace::qubits(kKept), sum / weight);
  const double f = target.amplitudes().dot(post.matrix() * target.amplitudes()).real();
  return {std::move(post), weight, f, std::move(target)};
}

namespace {

PurificationOutcome finish(const std::vector<Branch>& branches, Scheme scheme, Selection selection) {
  const auto keep = selected_outcomes(scheme, selection);
  const auto [sum, weight] = aggregate(branches, keep);
  if (!(weight > kZeroProbability)) {
    throw DegenerateInputError("selected purification outcome has zero probability; post-state undefined");
  }
  auto target = purification_target(scheme, selection);
  auto post = DensityMatrix::from_hermitized(CompositeSpace::qubits(kKept), sum / weight);
  const double f = state_fidelity(post, target);
  return {std::move(post), weight, f, to_string(selection), std::move(target)};
}

}  // namespace

PurificationOutcome purify(const DensityMatrix& rho1, const DensityMatrix& rho2, Scheme scheme,
                           Selection selection) {
  if (scheme == Scheme::kDoubleSelection) throw InvalidArgument("purify: use purify_double_selection");
  return finish(purification_branches({rho2.as_operator(), rho1.as_operator()}, scheme), scheme, selection);
}

PurificationOutcome purify_double_selection(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                            const DensityMatrix& rho3) {
  const auto branches = purification_branches({rho3.as_operator(), rho2.as_operator(), rho1.as_operator()},
                                              Scheme::kDoubleSelection);
  return finish(branches, Scheme::kDoubleSelection, Selection::kBothConsistent);
}

}  // namespace qnet
