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

#include "qnet/channels/storage.hpp"

#include <cmath>
#include <limits>

#include "qnet/channels/error_channels.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

KrausChannel storage_damping(double t_ns, double T1_ns) {
  if (t_ns < 0.0 || !(T1_ns > 0.0)) throw InvalidArgument("storage_damping: need t >= 0, T1 > 0");
  const double p = std::isinf(T1_ns) ? 0.0 : -std::expm1(-t_ns / T1_ns);
  return make_channel(ChannelKind::kAmplitudeDamping, p);
}

KrausChannel storage_dephasing(double t_ns, double Tphi_ns) {
  if (t_ns < 0.0 || !(Tphi_ns > 0.0)) throw InvalidArgument("storage_dephasing: need t >= 0, T_phi > 0");
  const double x = t_ns / Tphi_ns;
  // Phase flip with probability p scales coherences by 1 - 2p.
  const double p = std::isinf(Tphi_ns) ? 0.0 : 0.5 * (-std::expm1(-x * x));
  return make_channel(ChannelKind::kPhaseFlip, p);
}

DensityMatrix store_pair(const DensityMatrix& rho, double t_ns, const StorageLifetimes& a,
                         const StorageLifetimes& b) {
  if (rho.space().size() != 2) throw DimensionError("store_pair: expected a two-qubit state");
  DensityMatrix out = rho;
  const auto& labels = rho.space().labels();
  const StorageLifetimes* life[2] = {&a, &b};
  for (std::size_t q = 0; q < 2; ++q) {
    const std::vector<std::string> target{labels[q]};
    out = apply_channel(out, storage_damping(t_ns, life[q]->T1_ns), target);
    out = apply_channel(out, storage_dephasing(t_ns, life[q]->Tphi_ns), target);
  }
  return out;
}

}  // namespace qnet
