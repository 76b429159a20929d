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
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "qnet/channels/bell.hpp"
#include "qnet/channels/error_channels.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"
#include "qnet/protocols/analytic.hpp"
#include "qnet/protocols/gates.hpp"
#include "qnet/protocols/pipeline.hpp"
#include "qnet/protocols/protection.hpp"
#include "qnet/protocols/purification.hpp"

using namespace qnet;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Vector basis4(int i) {
  Vector v = Vector::Zero(4);
  v(i) = 1.0;
  return v;
}

DensityMatrix werner_like(double F) {
  // (F) psi- + (1-F) phi-, built from the two projectors.
  const Matrix m = bell_state(BellLabel::kPsiMinus).projector().matrix();
  const Matrix f = bell_state(BellLabel::kPhiMinus).projector().matrix();
  return DensityMatrix(CompositeSpace::qubits({"A", "B"}), F * m + (1.0 - F) * f);
}

DensityMatrix damped(double p) { return one_sided_bell_error(ChannelKind::kAmplitudeDamping, p); }

DensityMatrix ideal_pair() { return DensityMatrix(bell_state(BellLabel::kPsiMinus, {"Q1A", "Q1B"})); }

}  // namespace

TEST(Gates, IswapAndCz) {
  const auto iswap = standard_gate("iSWAP").unitary.matrix();
  const Vector out = iswap * basis4(2);  // |eg>
  EXPECT_NEAR(std::abs(out(1) - Complex(0.0, -1.0)), 0.0, 1e-15);
  const auto cz = standard_gate("CZ").unitary.matrix();
  EXPECT_NEAR((cz * basis4(3))(3).real(), -1.0, 1e-15);
  for (const char* name : {"I", "X", "Y", "Z", "X/2", "Y/2", "-X/2", "-Y/2", "iSWAP", "CZ"})
    EXPECT_TRUE(standard_gate(name).unitary.is_unitary()) << name;
  EXPECT_THROW(standard_gate("T"), InvalidArgument);
}

TEST(Gates, HalfRotationsSquareToPi) {
  const Matrix x2 = standard_gate("X/2").unitary.matrix();
  const Matrix x = standard_gate("X").unitary.matrix();
  // Up to global phase, (X/2)^2 = X and X^2 = I.
  const Matrix sq = x2 * x2;
  const Complex ph = sq(0, 1) / x(0, 1);
  EXPECT_NEAR(std::abs(ph), 1.0, 1e-15);
  EXPECT_LT(max_abs(sq - ph * x), 1e-15);
  const Matrix xx = x * x;
  EXPECT_LT(max_abs(xx - xx(0, 0) * Matrix::Identity(2, 2)), 1e-15);
}

TEST(Gates, ComposedCnotTruthTable) {
  const auto space = CompositeSpace::qubits({"c", "t"});
  const auto u = circuit_unitary(compose_cnot("c", "t"), space).matrix();
  EXPECT_LT(max_abs(u - cnot_matrix()), 1e-12);
  // Truth table by hand: gg->gg, ge->ge, eg->ee, ee->eg.
  const int map[4] = {0, 1, 3, 2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs((u * basis4(i))(map[i])), 1.0, 1e-12);
  EXPECT_THROW(compose_cnot("c", "c"), LabelError);
}

TEST(Analytic, PurifiedFidelityValues) {
  EXPECT_DOUBLE_EQ(analytic_purified_fidelity(1.0), 1.0);
  EXPECT_DOUBLE_EQ(analytic_purified_fidelity(0.5), 0.5);
  EXPECT_NEAR(analytic_purified_fidelity(0.75), 0.9, 1e-15);
  EXPECT_THROW(analytic_purified_fidelity(1.2), InvalidArgument);
}

TEST(Purify, WernerLikeMatchesClosedForm) {
  for (int i = 0; i <= 10; ++i) {
    const double F = 0.5 + 0.05 * i;
    const auto out = purify(werner_like(F), werner_like(F), Scheme::kBit, Selection::kBothConsistent);
    EXPECT_NEAR(out.fidelity, analytic_purified_fidelity(F), 1e-12) << F;
    EXPECT_NEAR(out.success_prob, F * F + (1 - F) * (1 - F), 1e-12) << F;
  }
}

TEST(Purify, BranchProbabilitiesSumToOne) {
  for (auto scheme : {Scheme::kBit, Scheme::kPhase}) {
    for (double p : {0.0, 0.3, 0.7}) {
      const auto rho = damped(p).as_operator();
      const auto branches = purification_branches({rho, rho}, scheme);
      EXPECT_EQ(branches.size(), 4u);
      double total = 0.0;
      for (const auto& b : branches) {
        total += b.probability;
        if (b.state) {
          EXPECT_TRUE(check_physical(b.state->matrix()).ok);
        }
      }
      EXPECT_NEAR(total, 1.0, 1e-10);
    }
  }
}

TEST(Purify, DampedEeBranchIsPsiPlus) {
  const Matrix plus = bell_state(BellLabel::kPsiPlus).projector().matrix();
  for (double p = 0.0; p < 0.999; p += 0.05) {
    const auto out = purify(damped(p), damped(p), Scheme::kBit, Selection::kEE);
    EXPECT_LT(max_abs(out.post_state.matrix() - plus), 1e-12) << p;
    EXPECT_NEAR(out.fidelity, 1.0, 1e-12);
    EXPECT_NEAR(out.success_prob, (1.0 - p) / 2.0, 1e-12);
    const auto cf = analytic_damped_postselect(p, Selection::kEE);
    EXPECT_NEAR(cf.success, out.success_prob, 1e-12);
  }
  EXPECT_THROW(purify(damped(1.0), damped(1.0), Scheme::kBit, Selection::kEE), DegenerateInputError);
}

TEST(Purify, DampedGgBranchClosedForm) {
  for (double p = 0.0; p < 0.999; p += 0.05) {
    const auto out = purify(damped(p), damped(p), Scheme::kBit, Selection::kGG);
    EXPECT_NEAR(out.fidelity, (2 - p) * (2 - p) / (4 * (1 - p + p * p)), 1e-12) << p;
    EXPECT_NEAR(out.success_prob, (1 - p + p * p) / 2, 1e-12) << p;
  }
}

TEST(Purify, IdealInputsArePerfect) {
  const DensityMatrix psi(bell_state(BellLabel::kPsiMinus));
  for (auto scheme : {Scheme::kBit, Scheme::kPhase}) {
    const auto out = purify(psi, psi, scheme, Selection::kBothConsistent);
    EXPECT_NEAR(out.fidelity, 1.0, 1e-12);
    EXPECT_NEAR(out.success_prob, 1.0, 1e-12);
    EXPECT_NEAR(out.post_state.purity(), 1.0, 1e-12);
  }
  const auto d = purify_double_selection(psi, psi, psi);
  EXPECT_NEAR(d.fidelity, 1.0, 1e-12);
  EXPECT_NEAR(d.success_prob, 1.0, 1e-12);
}

TEST(Purify, DoubleSelectionSucceedsLessOften) {
  for (double p : {0.1, 0.3}) {
    const auto rho = damped(p);
    const auto single = purify(rho, rho, Scheme::kBit, Selection::kBothConsistent);
    const auto dbl = purify_double_selection(rho, rho, rho);
    EXPECT_LE(dbl.success_prob, single.success_prob + 1e-12) << p;
  }
}

TEST(Analytic, CombinedEeBranchAgainstOracle) {
  for (double eps_d : {0.05, 0.1}) {
    for (double eps_p : {0.02, 0.05}) {
      const ErrorParams params{0.0, eps_d, eps_p};
      const auto rho = combined_error_operator(params);
      const auto raw = purify_raw(rho, rho, Scheme::kBit, Selection::kEE);
      const Vector m = bell_state(BellLabel::kPsiMinus).amplitudes();
      const double oracle = m.dot(raw.post_state.matrix() * m).real();
      const auto cf = analytic_combined_postselect(params, Selection::kEE);
      EXPECT_NEAR(cf.eps_p_prime, oracle, 1e-12);
      EXPECT_NEAR(cf.eps_p_prime, (2 * eps_p - 2 * eps_p * eps_p - eps_d) / (1 - 2 * eps_d), 1e-12);
      EXPECT_GT(std::abs(alternative_ee_phase_error(params) - oracle), 1e-3);
      EXPECT_NEAR(raw.success_prob, 0.5 - eps_d, 1e-12);
    }
  }
  const auto zero = analytic_combined_postselect({0.0, 0.0, 0.0}, Selection::kEE);
  EXPECT_NEAR(zero.fidelity, 1.0, 1e-15);
  EXPECT_NEAR(zero.success, 0.5, 1e-15);
}

TEST(Protection, ZeroNoiseIsIdentity) {
  QuasiStaticNoise noise;
  noise.sigma = 0.0;
  noise.n_trajectories = 4;
  ProtectionParams params;
  params.T1_A_ns = std::numeric_limits<double>::infinity();
  params.T1_B_ns = std::numeric_limits<double>::infinity();
  params.total_time_ns = 700.0;
  for (const auto& s : {protect_dd(ideal_pair(), noise, params), protect_free(ideal_pair(), noise, params)}) {
    for (double f : s.fidelity_mean) EXPECT_NEAR(f, 1.0, 1e-12);
  }
}

TEST(Protection, RabiAtZeroDriveEqualsFree) {
  QuasiStaticNoise noise;
  noise.sigma = 1e-3;
  noise.n_trajectories = 50;
  ProtectionParams params;
  const auto free = protect_free(ideal_pair(), noise, params);
  const auto rd = protect_rabi(ideal_pair(), 0.0, noise, params);
  ASSERT_EQ(free.t_ns.size(), rd.t_ns.size());
  for (std::size_t i = 0; i < free.t_ns.size(); ++i)
    EXPECT_NEAR(free.fidelity_mean[i], rd.fidelity_mean[i], 1e-12);
}

TEST(Protection, DecouplingBeatsFreeAndIsReproducible) {
  QuasiStaticNoise noise;
  noise.sigma = 1e-3;
  noise.n_trajectories = 100;
  ProtectionParams params;
  const auto free = protect_free(ideal_pair(), noise, params);
  const auto dd = protect_dd(ideal_pair(), noise, params);
  for (std::size_t i = 0; i < dd.t_ns.size(); ++i) EXPECT_GE(dd.fidelity_mean[i], free.fidelity_mean[i] - 1e-12);
  params.threads = 4;
  const auto dd4 = protect_dd(ideal_pair(), noise, params);
  EXPECT_EQ(dd.fidelity_mean, dd4.fidelity_mean);
  EXPECT_EQ(dd.fidelity_stderr, dd4.fidelity_stderr);
  noise.seed = 2;
  EXPECT_NE(protect_free(ideal_pair(), noise, params).fidelity_mean, free.fidelity_mean);
}

TEST(Protection, CalibrationHitsTarget) {
  QuasiStaticNoise noise;
  noise.n_trajectories = 200;
  ProtectionParams params;
  noise.sigma = calibrate_sigma(ideal_pair(), 0.6, 1400.0, noise, params);
  const auto free = protect_free(ideal_pair(), noise, params);
  EXPECT_NEAR(free.fidelity_mean.back(), 0.6, 1e-4);
}

TEST(Protection, EffectiveT2UnderPureDamping) {
  QuasiStaticNoise noise;
  noise.sigma = 0.0;
  noise.n_trajectories = 1;
  ProtectionParams params;
  params.T1_A_ns = 4000.0;
  params.T1_B_ns = 4000.0;
  // Coherence 1/2 exp(-t/T1) on the Bell block, i.e. qubit T2 = 2 T1.
  EXPECT_NEAR(effective_t2(protect_free(ideal_pair(), noise, params)), 8000.0, 1e-6 * 8000.0);
}

TEST(Protection, CsvColumns) {
  QuasiStaticNoise noise;
  noise.n_trajectories = 2;
  ProtectionParams params;
  params.total_time_ns = 140.0;
  std::ostringstream out;
  write_protection_csv(out, protect_free(ideal_pair(), noise, params));
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "t_ns,fidelity_mean,fidelity_stderr,n_traj");
}

TEST(Pipeline, SuccessDecreasesWithDelay) {
  const DeviceParams device;
  const auto a = purification_pipeline(20.0, device);
  const auto b = purification_pipeline(200.0, device);
  EXPECT_GT(a.success, b.success);
  EXPECT_GT(a.fidelity_post, a.fidelity_second);
  EXPECT_GT(first_pair_storage_time(200.0, device), first_pair_storage_time(20.0, device));
}
