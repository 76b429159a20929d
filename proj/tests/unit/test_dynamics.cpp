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

#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "qnet/channels/bell.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"
#include "qnet/dynamics/cable_experiments.hpp"
#include "qnet/dynamics/cable_system.hpp"
#include "qnet/dynamics/coupler.hpp"
#include "qnet/dynamics/lindblad.hpp"
#include "qnet/dynamics/trajectory_io.hpp"

using namespace qnet;

namespace {

const double kPi = std::numbers::pi;

Matrix lowering2() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_z2() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

CompositeSpace one_qubit() { return CompositeSpace::qubits({"q"}); }

}  // namespace

TEST(Coupler, MaximumStrengthNearMeasuredValue) {
  const auto& q = device_qubit("Q2A");
  const auto cp = default_coupler(q);
  const auto best = max_coupler_strength(cp, q.f_eg_ghz, kCommunicationModeGhz);
  const double g_mhz = angular_to_mhz(best.g);
  EXPECT_GT(g_mhz, 28.0 * 0.85);
  EXPECT_LT(g_mhz, 28.0 * 1.15);
}

TEST(Coupler, DecoupledLimitAndSingularPoint) {
  auto cp = default_coupler(device_qubit("Q2A"));
  cp.delta = kPi / 2 - 1e-5;
  const double near = std::abs(coupler_strength(cp, 5.8, kCommunicationModeGhz));
  cp.delta = 0.0;
  const double zero = std::abs(coupler_strength(cp, 5.8, kCommunicationModeGhz));
  EXPECT_LT(near, 1e-3 * zero);
  cp.delta = kPi / 2;
  EXPECT_THROW(coupler_strength(cp, 5.8, kCommunicationModeGhz), SingularCouplerError);
  // M by hand at delta = pi.
  cp.delta = kPi;
  EXPECT_NEAR(mutual_inductance(cp), 0.04 / (0.4 + 0.1 - 0.62), 1e-12);
}

TEST(Hamiltonian, ZeroCouplingIsDiagonal) {
  const CableSystem sys(CableParams{}, Basis::kFull);
  const auto h = sys.hamiltonian({0.3, -0.2, 0.0, 0.0}).matrix();
  EXPECT_LT((h - Matrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
  // |Q2A=e, C1=1, C2=0, C3=0, Q2B=e> = binary 11001.
  const double fsr = CableParams{}.omega_fsr;
  EXPECT_NEAR(h(25, 25).real(), 0.3 - 0.2 - fsr, 1e-12);
}

TEST(Hamiltonian, SingleExcitationBlockByHand) {
  CableParams cable;
  const CableSystem sys(cable, Basis::kSingleExcitation);
  const double g = 0.02;
  const auto h = sys.hamiltonian({0.0, 0.0, g, 0.0}).matrix();
  // Order {vac, Q2A, C1, C2, C3, Q2B}; the qubit + modes block is 4x4.
  Matrix expect = Matrix::Zero(4, 4);
  expect(1, 1) = -cable.omega_fsr;
  expect(3, 3) = cable.omega_fsr;
  for (int m = 1; m <= 3; ++m) expect(0, m) = expect(m, 0) = g;
  EXPECT_LT((h.block(1, 1, 4, 4) - expect).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(h.row(0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(h.row(5).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Lindblad, AmplitudeDecayMatchesExponential) {
  const double T1 = 100.0;
  Generator gen{ComplexOperator::zero(one_qubit()), {}};
  gen.collapse.add(ComplexOperator(one_qubit(), lowering2()), 1.0 / T1, "T1");
  const DensityMatrix e(PureState::basis(one_qubit(), 1));
  const std::vector<double> grid{0.0, T1};
  const auto traj = lindblad_evolve(gen, e, grid);
  EXPECT_NEAR(traj.states.back().population(1), std::exp(-1.0), 1e-6);
}

TEST(Lindblad, DephasingRateConvention) {
  const double Tphi = 80.0;
  Generator gen{ComplexOperator::zero(one_qubit()), {}};
  gen.collapse.add(ComplexOperator(one_qubit(), sigma_z2()), 1.0 / (2.0 * Tphi), "Tphi");
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const DensityMatrix rho(PureState(one_qubit(), plus));
  const std::vector<double> grid{0.0, Tphi};
  const auto traj = lindblad_evolve(gen, rho, grid);
  EXPECT_NEAR(2.0 * std::abs(traj.states.back()(0, 1)), std::exp(-1.0), 1e-6);
}

TEST(Lindblad, LosslessSwapAtQuarterPeriod) {
  CableParams cable;
  cable.n_modes = 1;
  const CableSystem sys(cable, Basis::kSingleExcitation);
  const double g = mhz_to_angular(4.3);
  Generator gen{sys.hamiltonian({0.0, 0.0, g, 0.0}), {}};
  const double t_swap = kPi / (2.0 * g);
  std::vector<double> grid;
  for (int i = 0; i <= 400; ++i) grid.push_back(1.5 * t_swap * i / 400.0);
  const auto traj = lindblad_evolve(gen, sys.excited_state("Q2A"), grid);
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (sys.occupation(traj.states[i], "C1") > sys.occupation(traj.states[best], "C1")) best = i;
  EXPECT_NEAR(grid[best], t_swap, 0.005 * t_swap);
  EXPECT_NEAR(sys.occupation(traj.states[best], "C1"), 1.0, 1e-4);
  for (const auto& s : traj.states) {
    EXPECT_NEAR(s.purity(), 1.0, 1e-7);
    EXPECT_NEAR(s.matrix().trace().real(), 1.0, 1e-8);
    EXPECT_LT((s.matrix() - s.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Lindblad, DeterministicAndConvergent) {
  CableParams cable;
  const CableSystem sys(cable, Basis::kSingleExcitation);
  Generator gen{sys.hamiltonian({0.0, 0.0, mhz_to_angular(4.3), 0.0}), {}};
  gen.collapse.add(ComplexOperator(sys.space(), sys.lowering("C2")), 1.0 / 477.3, "C2");
  const std::vector<double> grid{0.0, 20.0, 45.0};
  IntegratorOptions opt;
  opt.richardson_check = true;
  const auto a = lindblad_evolve(gen, sys.excited_state("Q2A"), grid, opt);
  const auto b = lindblad_evolve(gen, sys.excited_state("Q2A"), grid, opt);
  EXPECT_LT(a.richardson_error, 1e-6);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(a.states[i].matrix(), b.states[i].matrix());
}

TEST(Bell, SingleExcitationMatchesFullSpace) {
  const DeviceParams device;
  BellOptions se;
  BellOptions full;
  full.basis = Basis::kFull;
  const auto a = generate_bell_via_cable(10.0, device, se);
  const auto b = generate_bell_via_cable(10.0, device, full);
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(a(i, i).real(), b(i, i).real(), 1e-6);
  EXPECT_LT((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Bell, FidelityBandAndMonotoneDecrease) {
  const DeviceParams device;
  const auto target = bell_state(BellLabel::kPsiMinus, {"Q2A", "Q2B"});
  double prev = 2.0;
  for (double t_d : {10.0, 50.0, 100.0, 200.0, 400.0}) {
    const double f = state_fidelity(generate_bell_via_cable(t_d, device), target);
    if (t_d == 10.0) {
      EXPECT_GE(f, 0.90);
      EXPECT_LE(f, 0.94);
    }
    EXPECT_LT(f, prev) << t_d;
    prev = f;
  }
}

TEST(Bell, StepHalvingChangesFidelityLittle) {
  const DeviceParams device;
  const auto target = bell_state(BellLabel::kPsiMinus, {"Q2A", "Q2B"});
  BellOptions coarse;
  BellOptions fine;
  fine.integrator.dt_ns = coarse.integrator.dt_ns / 2;
  const double a = state_fidelity(generate_bell_via_cable(10.0, device, coarse), target);
  const double b = state_fidelity(generate_bell_via_cable(10.0, device, fine), target);
  EXPECT_LT(std::abs(a - b), 1e-6);
}

TEST(Bell, LosslessSingleModeLimit) {
  DeviceParams device;
  device.cable.n_modes = 1;
  BellOptions opt;
  opt.lossless = true;
  const auto rho = generate_bell_via_cable(10.0, device, opt);
  const auto target = bell_state(expected_bell_label(device.cable), {"Q2A", "Q2B"});
  EXPECT_GE(state_fidelity(rho, target), 0.999);
}

TEST(Bell, LosslessThreeModesHighFidelity) {
  const DeviceParams device;
  BellOptions opt;
  opt.lossless = true;
  const auto rho = generate_bell_via_cable(10.0, device, opt);
  EXPECT_GE(state_fidelity(rho, bell_state(BellLabel::kPsiMinus, {"Q2A", "Q2B"})), 0.99);
}

TEST(Ringdown, RecoversConfiguredLifetime) {
  const DeviceParams device;
  std::vector<double> delays;
  for (int i = 0; i <= 10; ++i) delays.push_back(100.0 * i);
  const auto r = simulate_cable_ringdown(30.0, delays, device);
  EXPECT_NEAR(r.fitted_T1r_ns, 477.3, 0.05 * 477.3);
  // Longer cable lifetime gives a longer fit.
  DeviceParams longer = device;
  longer.cable.T1r_ns = 2.0 * device.cable.T1r_ns;
  EXPECT_GT(simulate_cable_ringdown(30.0, delays, longer).fitted_T1r_ns, 1.5 * r.fitted_T1r_ns);
  const std::vector<double> one{0.0};
  EXPECT_THROW(simulate_cable_ringdown(30.0, one, device), InvalidArgument);
}

TEST(Fit, ExactExponential) {
  std::vector<double> t;
  std::vector<double> y;
  for (int i = 0; i < 8; ++i) {
    t.push_back(10.0 * i);
    y.push_back(0.7 * std::exp(-t.back() / 33.0));
  }
  const auto fit = fit_exponential(t, y);
  EXPECT_NEAR(fit.amplitude, 0.7, 1e-12);
  EXPECT_NEAR(fit.rate, 1.0 / 33.0, 1e-12);
}

TEST(VacuumRabi, FrequencyAndFirstMinimum) {
  VacuumRabiParams p;
  p.t_max_ns = 200.0;
  const auto s = simulate_vacuum_rabi(p);
  EXPECT_NEAR(oscillation_frequency(s) / (2.0 * p.g), 1.0, 0.01);
  EXPECT_NEAR(first_minimum_time(s), 58.0, 2.0);
  EXPECT_NEAR(s.pe.front(), 1.0, 1e-12);
}

TEST(TrajectoryIo, HeaderAndRows) {
  CableParams cable;
  const CableSystem sys(cable, Basis::kSingleExcitation);
  Generator gen{sys.hamiltonian({0.0, 0.0, 0.01, 0.0}), {}};
  const std::vector<double> grid{0.0, 1.0};
  const auto traj = lindblad_evolve(gen, sys.excited_state("Q2A"), grid);
  std::ostringstream out;
  write_trajectory_csv(out, traj, sys, {"Pe:Q2A", "Pe:C2"});
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t_ns,Pe:Q2A,Pe:C2");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
  EXPECT_THROW(write_trajectory_csv(out, traj, sys, {"Pe:Q9"}), LabelError);
}
