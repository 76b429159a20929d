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

#include "qnet/protocols/pipeline.hpp"

#include "qnet/channels/bell.hpp"
#include "qnet/core/ops.hpp"
#include "qnet/protocols/purification.hpp"

namespace qnet {

double first_pair_storage_time(double t_d_ns, const DeviceParams& device, const BellOptions& bell) {
  return device.iswap_ns + bell_generation_overhead(device, bell) + t_d_ns;
}

StorageLifetimes storage_lifetimes_a(const DeviceParams& device) {
  return {device.q1a.T1_ns(), device.q1a.Tphi_ns()};
}

StorageLifetimes storage_lifetimes_b(const DeviceParams& device) {
  return {device.q1b.T1_ns(), device.q1b.Tphi_ns()};
}

namespace {

DensityMatrix stored(const DensityMatrix& rho, double t, const DeviceParams& device, bool decay) {
  if (!decay || t <= 0.0) return rho;
  return store_pair(rho, t, storage_lifetimes_a(device), storage_lifetimes_b(device));
}

}  // namespace

PurificationPoint purification_pipeline(double t_d_ns, const DeviceParams& device,
                                        const PipelineOptions& options) {
  const auto fresh = generate_bell_via_cable(t_d_ns, device, options.bell);
  const double t_store = first_pair_storage_time(t_d_ns, device, options.bell);
  const auto first = stored(fresh, t_store, device, options.storage_decay);

  const auto psi = bell_state(BellLabel::kPsiMinus, fresh.space().labels());
  const auto out = purify(first, fresh, Scheme::kBit, Selection::kEE);

  PurificationPoint p;
  p.t_d_ns = t_d_ns;
  p.fidelity_first = state_fidelity(first, psi);
  p.fidelity_second = state_fidelity(fresh, psi);
  p.fidelity_post = out.fidelity;
  p.success = out.success_prob;
  p.fractional_gain = (p.fidelity_post - p.fidelity_second) / p.fidelity_second;
  return p;
}

ProtocolComparison compare_protocols(double t_d_ns, const DeviceParams& device,
                                     const PipelineOptions& options) {
  const auto fresh = generate_bell_via_cable(t_d_ns, device, options.bell);
  const double t_store = first_pair_storage_time(t_d_ns, device, options.bell);
  const auto once = stored(fresh, t_store, device, options.storage_decay);
  const auto twice = stored(fresh, 2.0 * t_store, device, options.storage_decay);

  ProtocolComparison c;
  c.t_d_ns = t_d_ns;
  c.storage_decay = options.storage_decay;
  c.fidelity_pre = state_fidelity(fresh, bell_state(BellLabel::kPsiMinus, fresh.space().labels()));
  const auto bit = purify(once, fresh, Scheme::kBit, Selection::kBothConsistent);
  c.bit_fidelity = bit.fidelity;
  c.bit_success = bit.success_prob;
  const auto bit_ee = purify(once, fresh, Scheme::kBit, Selection::kEE);
  c.bit_ee_fidelity = bit_ee.fidelity;
  c.bit_ee_success = bit_ee.success_prob;
  const auto phase = purify(once, fresh, Scheme::kPhase, Selection::kBothConsistent);
  c.phase_fidelity = phase.fidelity;
  c.phase_success = phase.success_prob;
  const auto dbl = purify_double_selection(twice, once, fresh);
  c.double_fidelity = dbl.fidelity;
  c.double_success = dbl.success_prob;
  return c;
}

}  // namespace qnet
