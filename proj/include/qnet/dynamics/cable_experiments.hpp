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

#include <span>
#include <vector>

#include "qnet/channels/bell.hpp"
#include "qnet/core/types.hpp"
#include "qnet/dynamics/cable_system.hpp"
#include "qnet/dynamics/lindblad.hpp"
#include "qnet/dynamics/params.hpp"

namespace qnet {

struct DeviceParams {
  QubitParams q2a = device_qubit("Q2A");
  QubitParams q2b = device_qubit("Q2B");
  QubitParams q1a = device_qubit("Q1A");
  QubitParams q1b = device_qubit("Q1B");
  CableParams cable;
  double g_swap = mhz_to_angular(4.3);  // qubit-mode coupling during swaps, rad/ns
  double T1_coupler_on_us = 2.1;
  double Tphi_coupler_on_us = 0.0;      // <= 0: keep the qubit's own T_phi
  double iswap_ns = 15.0;
  double pi_pulse_ns = 30.0;

  void validate() const;
};

struct BellOptions {
  Basis basis = Basis::kSingleExcitation;
  bool lossless = false;
  double half_swap_ns = 0.0;  // <= 0: pi/(4 g)
  double full_swap_ns = 0.0;  // <= 0: pi/(2 g)
  IntegratorOptions integrator;
};

double half_swap_time(double g);
double full_swap_time(double g);

// Bell state produced by the ideal sequence: the relative sign of the Q2B
// coupling to the central mode fixes psi- (even central index) or psi+.
BellLabel expected_bell_label(const CableParams& cable);

// Pi pulse on Q2A, half swap into the cable, both couplers off for t_d, full
// swap into Q2B. Returns the reduced state over (Q2A, Q2B).
DensityMatrix generate_bell_via_cable(double t_d_ns, const DeviceParams& device,
                                      const BellOptions& options = {});

// Time the pair spends in Q2A/Q2B during generation, excluding t_d.
double bell_generation_overhead(const DeviceParams& device, const BellOptions& options = {});

struct PopulationSeries {
  std::vector<double> t_ns;
  std::vector<double> pe;
};

struct VacuumRabiParams {
  double g = mhz_to_angular(4.3);
  double T1_eff_ns = 2100.0;
  double Tphi_ns = 3100.0;
  double T1r_ns = 477.3;
  double t_max_ns = 500.0;
  double dt_out_ns = 0.5;
  int n_modes = 3;
  Basis basis = Basis::kSingleExcitation;
  IntegratorOptions integrator;
};

// Q2A starts in |e>, resonant with the central mode; returns its excited population.
PopulationSeries simulate_vacuum_rabi(const VacuumRabiParams& params);

// Local minima of the population, each refined by a parabola through its neighbours.
std::vector<double> minima_times(const PopulationSeries& series, std::size_t max_count);
double first_minimum_time(const PopulationSeries& series);

// Angular frequency of the population oscillation from the spacing of the first
// two minima. Unlike the first-minimum time this is insensitive to the phase
// offset that unequal qubit and mode damping puts on the swap.
double oscillation_frequency(const PopulationSeries& series);

struct RingdownResult {
  PopulationSeries series;  // t_ns holds the idle delays
  double fitted_T1r_ns = 0.0;
  double fitted_amplitude = 0.0;
};

// Q2B population after swap in, idle for each delay, swap out.
PopulationSeries cable_ringdown_series(double swap_ns, std::span<const double> delays_ns,
                                       const DeviceParams& device, const IntegratorOptions& integrator = {});

// Q2B excited, full swap into the cable (coupling pi/(2 swap)), idle, swap back.
RingdownResult simulate_cable_ringdown(double swap_ns, std::span<const double> delays_ns,
                                       const DeviceParams& device,
                                       const IntegratorOptions& integrator = {});

struct ExponentialFit {
  double amplitude = 0.0;
  double rate = 0.0;  // 1/ns
};

// Least-squares fit of log(y) = log(A) - rate t.
ExponentialFit fit_exponential(std::span<const double> t, std::span<const double> y);

}  // namespace qnet
