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

#include "qnet/dynamics/cable_experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Lifetimes {
  double T1_ns = kInf;
  double Tphi_ns = kInf;
};

void add_qubit_decay(CollapseSet& set, const CableSystem& sys, const char* label, const Lifetimes& life) {
  if (std::isfinite(life.T1_ns)) set.add({sys.space(), sys.lowering(label)}, 1.0 / life.T1_ns, std::string("T1:") + label);
  if (std::isfinite(life.Tphi_ns)) {
    set.add({sys.space(), sys.sigma_z(label)}, 1.0 / (2.0 * life.Tphi_ns), std::string("Tphi:") + label);
  }
}

void add_mode_decay(CollapseSet& set, const CableSystem& sys, double T1r_ns) {
  if (!std::isfinite(T1r_ns)) return;
  for (int m = 1; m <= sys.cable().n_modes; ++m) {
    const std::string lbl = "C" + std::to_string(m);
    set.add({sys.space(), sys.lowering(lbl)}, 1.0 / T1r_ns, "T1r:" + lbl);
  }
}

// Coupler-on segments use the degraded lifetime of the connected qubit.
GeneratorBuilder device_builder(const CableSystem& sys, const DeviceParams& dev, bool lossless) {
  return [&sys, dev, lossless](const SegmentControls& c) {
    Generator g{sys.hamiltonian(c), {}};
    if (lossless) return g;
    auto life = [&](const QubitParams& q, bool on) {
      Lifetimes l{q.T1_ns(), q.Tphi_ns()};
      if (on) {
        l.T1_ns = us_to_ns(dev.T1_coupler_on_us);
        if (dev.Tphi_coupler_on_us > 0.0) l.Tphi_ns = us_to_ns(dev.Tphi_coupler_on_us);
      }
      return l;
    };
    add_qubit_decay(g.collapse, sys, "Q2A", life(dev.q2a, c.g_A != 0.0));
    add_qubit_decay(g.collapse, sys, "Q2B", life(dev.q2b, c.g_B != 0.0));
    add_mode_decay(g.collapse, sys, dev.cable.T1r_ns);
    return g;
  };
}

}  // namespace

void DeviceParams::validate() const {
  q2a.validate();
  q2b.validate();
  q1a.validate();
  q1b.validate();
  cable.validate();
  if (!(g_swap > 0.0)) throw InvalidArgument("device: swap coupling must be positive");
  if (!(T1_coupler_on_us > 0.0)) throw InvalidArgument("device: coupler-on T1 must be positive");
  if (iswap_ns < 0.0 || pi_pulse_ns < 0.0) throw InvalidArgument("device: gate durations must be >= 0");
}

BellLabel expected_bell_label(const CableParams& cable) {
  const int central = (cable.n_modes + 1) / 2;
  return central % 2 == 0 ? BellLabel::kPsiMinus : BellLabel::kPsiPlus;
}

double half_swap_time(double g) { return std::numbers::pi / (4.0 * g); }
double full_swap_time(double g) { return std::numbers::pi / (2.0 * g); }

double bell_generation_overhead(const DeviceParams& device, const BellOptions& options) {
  const double half = options.half_swap_ns > 0.0 ? options.half_swap_ns : half_swap_time(device.g_swap);
  const double full = options.full_swap_ns > 0.0 ? options.full_swap_ns : full_swap_time(device.g_swap);
  return device.pi_pulse_ns + half + full;
}

DensityMatrix generate_bell_via_cable(double t_d_ns, const DeviceParams& device,
                                      const BellOptions& options) {
  if (!(t_d_ns >= 0.0)) throw InvalidArgument("generate_bell_via_cable: t_d must be >= 0");
  device.validate();
  const double half = options.half_swap_ns > 0.0 ? options.half_swap_ns : half_swap_time(device.g_swap);
  const double full = options.full_swap_ns > 0.0 ? options.full_swap_ns : full_swap_time(device.g_swap);

  const CableSystem sys(device.cable, options.basis);
  PulseSchedule schedule;
  schedule.add(half, {0.0, 0.0, device.g_swap, 0.0}, "half swap A");
  if (t_d_ns > 0.0) schedule.add(t_d_ns, {}, "delay");
  schedule.add(full, {0.0, 0.0, 0.0, device.g_swap}, "full swap B");

  const auto builder = device_builder(sys, device, options.lossless);
  const auto rho = lindblad_final(schedule, builder, sys.excited_state("Q2A"), options.integrator);
  return sys.reduce_to_qubits(rho);
}

PopulationSeries simulate_vacuum_rabi(const VacuumRabiParams& p) {
  if (!(p.g > 0.0 && p.T1_eff_ns > 0.0 && p.Tphi_ns > 0.0 && p.T1r_ns > 0.0 && p.t_max_ns > 0.0 &&
        p.dt_out_ns > 0.0)) {
    throw InvalidArgument("simulate_vacuum_rabi: parameters must be positive");
  }
  CableParams cable;
  cable.n_modes = p.n_modes;
  cable.T1r_ns = p.T1r_ns;
  const CableSystem sys(cable, p.basis);
  Generator gen{sys.hamiltonian({0.0, 0.0, p.g, 0.0}), {}};
  add_qubit_decay(gen.collapse, sys, "Q2A", {p.T1_eff_ns, p.Tphi_ns});
  add_mode_decay(gen.collapse, sys, p.T1r_ns);

  std::vector<double> grid;
  const auto n = static_cast<std::size_t>(std::floor(p.t_max_ns / p.dt_out_ns + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) grid.push_back(static_cast<double>(i) * p.dt_out_ns);
  const auto traj = lindblad_evolve(gen, sys.excited_state("Q2A"), grid, p.integrator);

  PopulationSeries out;
  out.t_ns = traj.t_ns;
  for (const auto& rho : traj.states) out.pe.push_back(sys.occupation(rho, "Q2A"));
  return out;
}

std::vector<double> minima_times(const PopulationSeries& s, std::size_t max_count) {
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < s.pe.size() && out.size() < max_count; ++i) {
    if (s.pe[i] <= s.pe[i - 1] && s.pe[i] < s.pe[i + 1]) {
      const double y0 = s.pe[i - 1], y1 = s.pe[i], y2 = s.pe[i + 1];
      const double h = s.t_ns[i + 1] - s.t_ns[i];
      const double denom = y0 - 2.0 * y1 + y2;
      const double shift = denom != 0.0 ? 0.5 * h * (y0 - y2) / denom : 0.0;
      out.push_back(s.t_ns[i] + shift);
    }
  }
  return out;
}

double first_minimum_time(const PopulationSeries& s) {
  const auto m = minima_times(s, 1);
  if (m.empty()) throw NumericError("first_minimum_time: no interior minimum in the series");
  return m.front();
}

double oscillation_frequency(const PopulationSeries& s) {
  const auto m = minima_times(s, 2);
  if (m.size() < 2) throw NumericError("oscillation_frequency: fewer than two minima in the series");
  return 2.0 * std::numbers::pi / (m[1] - m[0]);
}

ExponentialFit fit_exponential(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size() || t.size() < 2) throw InvalidArgument("fit_exponential: need >= 2 matching points");
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double n = static_cast<double>(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > 0.0)) throw NumericError("fit_exponential: non-positive sample");
    const double ly = std::log(y[i]);
    st += t[i];
    sy += ly;
    stt += t[i] * t[i];
    sty += t[i] * ly;
  }
  const double denom = n * stt - st * st;
  if (denom == 0.0) throw DegenerateInputError("fit_exponential: all times equal");
  const double slope = (n * sty - st * sy) / denom;
  const double intercept = (sy - slope * st) / n;
  return {std::exp(intercept), -slope};
}

PopulationSeries cable_ringdown_series(double swap_ns, std::span<const double> delays_ns,
                                       const DeviceParams& device, const IntegratorOptions& integrator) {
  if (!(swap_ns > 0.0)) throw InvalidArgument("cable ringdown: swap duration must be positive");
  if (delays_ns.empty()) throw InvalidArgument("cable ringdown: no delays");
  device.validate();
  const double g = std::numbers::pi / (2.0 * swap_ns);
  const CableSystem sys(device.cable, Basis::kSingleExcitation);
  const auto builder = device_builder(sys, device, false);

  // Swap in once, then branch the idle evolution from the stored state.
  PulseSchedule in;
  in.add(swap_ns, {0.0, 0.0, 0.0, g}, "swap in");
  const auto stored = lindblad_final(in, builder, sys.excited_state("Q2B"), integrator);

  PopulationSeries out;
  for (double d : delays_ns) {
    if (d < 0.0) throw InvalidArgument("cable ringdown: delays must be >= 0");
    PulseSchedule rest;
    if (d > 0.0) rest.add(d, {}, "idle");
    rest.add(swap_ns, {0.0, 0.0, 0.0, g}, "swap out");
    const auto rho = lindblad_final(rest, builder, stored, integrator);
    out.t_ns.push_back(d);
    out.pe.push_back(sys.occupation(rho, "Q2B"));
  }
  return out;
}

RingdownResult simulate_cable_ringdown(double swap_ns, std::span<const double> delays_ns,
                                       const DeviceParams& device, const IntegratorOptions& integrator) {
  if (delays_ns.size() < 2) throw InvalidArgument("simulate_cable_ringdown: need at least two delays");
  RingdownResult out;
  out.series = cable_ringdown_series(swap_ns, delays_ns, device, integrator);
  const auto fit = fit_exponential(out.series.t_ns, out.series.pe);
  out.fitted_T1r_ns = 1.0 / fit.rate;
  out.fitted_amplitude = fit.amplitude;
  return out;
}

}  // namespace qnet
