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

#include "json.hpp"

#include "qnet/core/types.hpp"

namespace qnet {

// JSON contract: {"labels": [...], "dims": [...], "re": [...], "im": [...]},
// with re/im flattened row-major.
nlohmann::json to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ComplexOperator& op);
ComplexOperator operator_from_json(const nlohmann::json& j);

}  // namespace qnet
