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

#include "qnet/core/kraus_channel.hpp"

#include "qnet/core/errors.hpp"

namespace qnet {

KrausChannel::KrausChannel(std::string name, std::vector<std::size_t> dims,
                           std::vector<Matrix> operators)
    : name_(std::move(name)), dims_(std::move(dims)), ops_(std::move(operators)) {
  if (dims_.empty()) throw DimensionError("KrausChannel '" + name_ + "': no subsystem dims");
  dim_ = 1;
  for (auto d : dims_) dim_ *= d;
  if (ops_.empty()) throw InvalidArgument("KrausChannel '" + name_ + "': no operators");
  const auto n = static_cast<Eigen::Index>(dim_);
  for (const auto& e : ops_) {
    if (e.rows() != n || e.cols() != n) {
      throw DimensionError("KrausChannel '" + name_ + "': operator is not " +
                           std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
}

KrausChannel::Report KrausChannel::validate(double tol) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& e : ops_) sum += e.adjoint() * e;
  Report r;
  r.max_deviation = (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  r.pass = r.max_deviation <= tol;
  return r;
}

}  // namespace qnet
