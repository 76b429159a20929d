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

#include "qnet/core/serialization.hpp"

#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

nlohmann::json encode(const CompositeSpace& space, const Matrix& m) {
  nlohmann::json j;
  j["labels"] = space.labels();
  j["dims"] = space.dims();
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(m.size()));
  im.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

std::pair<CompositeSpace, Matrix> decode(const nlohmann::json& j) {
  for (const char* key : {"labels", "dims", "re", "im"}) {
    if (!j.contains(key)) throw InvalidArgument(std::string("matrix JSON: missing field '") + key + "'");
  }
  CompositeSpace space(j.at("dims").get<std::vector<std::size_t>>(),
                       j.at("labels").get<std::vector<std::string>>());
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  const auto n = space.dimension();
  if (re.size() != n * n || im.size() != n * n) {
    throw DimensionError("matrix JSON: expected " + std::to_string(n * n) + " entries");
  }
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r * n + c], im[r * n + c]};
  return {std::move(space), std::move(m)};
}

}  // namespace

nlohmann::json to_json(const DensityMatrix& rho) { return encode(rho.space(), rho.matrix()); }

DensityMatrix density_matrix_from_json(const nlohmann::json& j) {
  auto [space, m] = decode(j);
  return {std::move(space), std::move(m)};
}

nlohmann::json to_json(const ComplexOperator& op) { return encode(op.space(), op.matrix()); }

ComplexOperator operator_from_json(const nlohmann::json& j) {
  auto [space, m] = decode(j);
  return {std::move(space), std::move(m)};
}

}  // namespace qnet
