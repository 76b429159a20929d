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
#include <string>
#include <vector>

#include "qnet/core/types.hpp"

namespace qnet {

/// Operator-sum channel {E_i} on one or more subsystems with dimensions `dims`
/// (big-endian, like CompositeSpace). Completeness is not enforced at
/// construction so that broken channels can still be inspected with
/// `validate()`; `apply_channel` refuses them.
class KrausChannel {
 public:
  KrausChannel(std::string name, std::vector<std::size_t> dims, std::vector<Matrix> operators);

  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<Matrix>& operators() const { return ops_; }

  struct Report {
    double max_deviation = 0.0;  // max |sum E^dagger E - I| entry
    bool pass = false;
  };
  Report validate(double tol = Tolerances::defaults().completeness) const;

 private:
  std::string name_;
  std::vector<std::size_t> dims_;
  std::size_t dim_ = 1;
  std::vector<Matrix> ops_;
};

}  // namespace qnet
