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

#include "qnet/core/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "qnet/core/errors.hpp"

namespace qnet {

CompositeSpace::CompositeSpace(std::vector<std::size_t> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.size() != labels_.size()) {
    throw DimensionError("CompositeSpace: " + std::to_string(dims_.size()) + " dims but " +
                         std::to_string(labels_.size()) + " labels");
  }
  std::unordered_set<std::string> seen;
  total_ = 1;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw DimensionError("CompositeSpace: subsystem '" + labels_[i] + "' has dimension < 2");
    }
    if (!seen.insert(labels_[i]).second) {
      throw LabelError("CompositeSpace: duplicate label '" + labels_[i] + "'");
    }
    total_ *= dims_[i];
    if (total_ > kMaxDimension) {
      throw DimensionError("CompositeSpace: total dimension exceeds " +
                           std::to_string(kMaxDimension));
    }
  }
}

CompositeSpace CompositeSpace::qubits(std::vector<std::string> labels) {
  std::vector<std::size_t> dims(labels.size(), 2);
  return {std::move(dims), std::move(labels)};
}

std::size_t CompositeSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw LabelError("unknown subsystem label '" + label + "' in " + describe());
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

bool CompositeSpace::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

CompositeSpace CompositeSpace::subspace(std::span<const std::string> labels) const {
  std::vector<std::size_t> dims;
  std::vector<std::string> names;
  for (const auto& l : labels) {
    dims.push_back(dims_[index_of(l)]);
    names.push_back(l);
  }
  return {std::move(dims), std::move(names)};
}

CompositeSpace CompositeSpace::concat(const CompositeSpace& other) const {
  auto dims = dims_;
  auto labels = labels_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return {std::move(dims), std::move(labels)};
}

std::vector<std::size_t> CompositeSpace::digits(std::size_t index) const {
  std::vector<std::size_t> d(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    d[k] = index % dims_[k];
    index /= dims_[k];
  }
  return d;
}

std::size_t CompositeSpace::compose(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) idx = idx * dims_[k] + digits[k];
  return idx;
}

std::string CompositeSpace::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ", ";
    os << labels_[i] << ":" << dims_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace qnet
