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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qnet {

/// Largest total Hilbert-space dimension accepted anywhere in the library.
inline constexpr std::size_t kMaxDimension = 4096;

/// Ordered, labeled tensor-product structure. Composite indices are
/// big-endian in label order: the first label is the slowest-varying digit.
class CompositeSpace {
 public:
  CompositeSpace() = default;
  CompositeSpace(std::vector<std::size_t> dims, std::vector<std::string> labels);

  /// Convenience for n two-level systems.
  static CompositeSpace qubits(std::vector<std::string> labels);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t dimension() const { return total_; }

  /// Position of `label`; throws LabelError when absent.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;
  std::size_t dim_of(const std::string& label) const { return dims_[index_of(label)]; }

  /// Sub-space made of `labels`, in the order given.
  CompositeSpace subspace(std::span<const std::string> labels) const;

  /// Concatenation; throws LabelError on duplicate labels.
  CompositeSpace concat(const CompositeSpace& other) const;

  /// Mixed-radix digits of a composite index and back.
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t compose(std::span<const std::size_t> digits) const;

  bool operator==(const CompositeSpace&) const = default;

  std::string describe() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
  std::size_t total_ = 1;
};

}  // namespace qnet
