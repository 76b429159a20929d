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

#include "qnet/tomography/readout.hpp"

#include <cmath>
#include <string>

#include "qnet/core/errors.hpp"
#include "qnet/dynamics/params.hpp"

namespace qnet {

namespace {

constexpr double kSingularGap = 1e-9;

Eigen::Matrix2d inverse_confusion(const Visibility& v) {
  const double det = v.F_g + v.F_e - 1.0;
  if (std::abs(det) < kSingularGap) throw InvalidArgument("readout confusion matrix is singular (F_g + F_e = 1)");
  Eigen::Matrix2d inv;
  inv << v.F_e, -(1.0 - v.F_e), -(1.0 - v.F_g), v.F_g;
  return inv / det;
}

Eigen::MatrixXd kron_all(const std::vector<Eigen::Matrix2d>& parts) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (const auto& p : parts) {
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * p;
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

void Visibility::validate() const {
  if (!(F_g >= 0.0 && F_g <= 1.0 && F_e >= 0.0 && F_e <= 1.0)) {
    throw InvalidArgument("visibility outside [0,1]");
  }
  if (!(F_g + F_e > 1.0)) throw InvalidArgument("visibility requires F_g + F_e > 1");
}

Eigen::Matrix2d Visibility::confusion() const {
  Eigen::Matrix2d f;
  f << F_g, 1.0 - F_e, 1.0 - F_g, F_e;
  return f;
}

VisibilityMatrix VisibilityMatrix::perfect(std::size_t n_qubits) {
  return {std::vector<Visibility>(n_qubits)};
}

void VisibilityMatrix::validate() const {
  if (qubits.empty()) throw InvalidArgument("visibility matrix has no qubits");
  for (const auto& q : qubits) q.validate();
}

Eigen::MatrixXd VisibilityMatrix::confusion() const {
  std::vector<Eigen::Matrix2d> parts;
  for (const auto& q : qubits) parts.push_back(q.confusion());
  return kron_all(parts);
}

VisibilityMatrix device_visibilities(const std::vector<std::string>& qubit_names) {
  VisibilityMatrix v;
  for (const auto& name : qubit_names) {
    const auto& q = device_qubit(name);
    v.qubits.push_back({q.F_g, q.F_e});
  }
  return v;
}

RealVector apply_confusion(const RealVector& probs, const VisibilityMatrix& vis) {
  vis.validate();
  const Eigen::MatrixXd f = vis.confusion();
  if (f.cols() != probs.size()) throw DimensionError("apply_confusion: probability vector size mismatch");
  return f * probs;
}

CorrectedProbabilities correct_readout(const RealVector& measured, const VisibilityMatrix& vis) {
  if (vis.qubits.empty()) throw InvalidArgument("visibility matrix has no qubits");
  std::vector<Eigen::Matrix2d> parts;
  for (const auto& q : vis.qubits) parts.push_back(inverse_confusion(q));
  const Eigen::MatrixXd inv = kron_all(parts);
  if (inv.cols() != measured.size()) throw DimensionError("correct_readout: probability vector size mismatch");
  CorrectedProbabilities out;
  out.pre_clip = inv * measured;
  out.probs = out.pre_clip.cwiseMax(0.0).cwiseMin(1.0);
  const double sum = out.probs.sum();
  if (!(sum > 0.0)) throw DegenerateInputError("correct_readout: all corrected probabilities clipped to zero");
  out.probs /= sum;
  return out;
}

}  // namespace qnet
