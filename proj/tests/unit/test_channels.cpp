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

#include <gtest/gtest.h>

#include "qnet/channels/bell.hpp"
#include "qnet/channels/error_channels.hpp"
#include "qnet/channels/storage.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

using namespace qnet;

namespace {

const double kS = 1.0 / std::sqrt(2.0);
const std::vector<std::string> kB{"B"};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// 1/2 [[p,0,0,0],[0,1-p,-sqrt(1-p),0],[0,-sqrt(1-p),1,0],[0,0,0,0]]
Matrix damped_literal(double p) {
  const double c = std::sqrt(1.0 - p);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  m(1, 2) = -c;
  m(2, 1) = -c;
  m(2, 2) = 1.0;
  return 0.5 * m;
}

std::vector<double> p_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 20; ++i) g.push_back(0.05 * i);
  return g;
}

}  // namespace

TEST(BellState, Amplitudes) {
  const auto m = bell_state(BellLabel::kPsiMinus).amplitudes();
  EXPECT_NEAR(m(2).real(), kS, 1e-15);
  EXPECT_NEAR(m(1).real(), -kS, 1e-15);
  EXPECT_NEAR(std::abs(m(0)) + std::abs(m(3)), 0.0, 1e-15);
  const auto f = bell_state(BellLabel::kPhiPlus).amplitudes();
  EXPECT_NEAR(f(0).real(), kS, 1e-15);
  EXPECT_NEAR(f(3).real(), kS, 1e-15);
  EXPECT_EQ(parse_bell_label("psi-"), BellLabel::kPsiMinus);
  EXPECT_THROW(parse_bell_label("chi"), InvalidArgument);
}

TEST(MakeChannel, OperatorsAndValidation) {
  const auto id = make_channel(ChannelKind::kBitFlip, 0.0);
  EXPECT_LT(max_abs(id.operators()[0] - Matrix::Identity(2, 2)), 1e-15);
  for (std::size_t k = 1; k < id.operators().size(); ++k) EXPECT_LT(max_abs(id.operators()[k]), 1e-15);
  const auto z = make_channel(ChannelKind::kPhaseFlip, 1.0);
  Matrix zm = Matrix::Zero(2, 2);
  zm(0, 0) = 1.0;
  zm(1, 1) = -1.0;
  EXPECT_LT(max_abs(z.operators().back() - zm), 1e-15);
  for (auto kind : {ChannelKind::kBitFlip, ChannelKind::kPhaseFlip, ChannelKind::kAmplitudeDamping}) {
    for (double p : p_grid()) EXPECT_TRUE(channel_validate(make_channel(kind, p)).pass);
    EXPECT_THROW(make_channel(kind, -0.1), InvalidArgument);
    EXPECT_THROW(make_channel(kind, 1.1), InvalidArgument);
  }
}

TEST(ChannelValidate, SpecExamples) {
  const KrausChannel twice("double", {2}, {Matrix::Identity(2, 2), Matrix::Identity(2, 2)});
  const auto r = channel_validate(twice);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_deviation, 1.0, 1e-15);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  const KrausChannel mix("mix", {2}, {std::sqrt(0.3) * Matrix::Identity(2, 2), std::sqrt(0.7) * x});
  EXPECT_TRUE(channel_validate(mix).pass);
}

TEST(OneSidedBellError, AmplitudeDampingMatchesLiteral) {
  for (double p : p_grid()) {
    if (p >= 1.0) continue;
    const auto rho = one_sided_bell_error(ChannelKind::kAmplitudeDamping, p);
    EXPECT_LT(max_abs(rho.matrix() - damped_literal(p)), 1e-12) << p;
    EXPECT_NEAR(state_fidelity(rho, bell_state(BellLabel::kPsiMinus)),
                (2.0 - p + 2.0 * std::sqrt(1.0 - p)) / 4.0, 1e-12);
  }
}

TEST(OneSidedBellError, FullDampingByHand) {
  // Kraus terms by hand on |psi-><psi-| with p=1: 1/2(|eg><eg| + |gg><gg|).
  const auto rho = one_sided_bell_error(ChannelKind::kAmplitudeDamping, 1.0);
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = 0.5;
  expect(2, 2) = 0.5;
  EXPECT_LT(max_abs(rho.matrix() - expect), 1e-15);
}

TEST(OneSidedBellError, EqualsKrausComposition) {
  const DensityMatrix psi(bell_state(BellLabel::kPsiMinus));
  for (auto kind : {ChannelKind::kBitFlip, ChannelKind::kPhaseFlip, ChannelKind::kAmplitudeDamping}) {
    for (double p : p_grid()) {
      const auto direct = one_sided_bell_error(kind, p);
      const auto oracle = apply_channel(psi, make_channel(kind, p), kB);
      EXPECT_LT(max_abs(direct.matrix() - oracle.matrix()), 1e-12) << to_string(kind) << " " << p;
    }
    EXPECT_LT(max_abs(one_sided_bell_error(kind, 0.0).matrix() - psi.matrix()), 1e-15);
  }
}

TEST(OneSidedBellError, BitAndPhaseWeightsFromKraus) {
  // X on B maps psi- to phi-; Z on B maps psi- to psi+ up to sign.
  for (double p : {0.1, 0.2}) {
    const auto wb = bell_weights(one_sided_bell_error(ChannelKind::kBitFlip, p).matrix());
    EXPECT_NEAR(wb.psi_minus, 1.0 - p, 1e-12);
    EXPECT_NEAR(wb.phi_minus, p, 1e-12);
    const auto wp = bell_weights(one_sided_bell_error(ChannelKind::kPhaseFlip, p).matrix());
    EXPECT_NEAR(wp.psi_minus, 1.0 - p, 1e-12);
    EXPECT_NEAR(wp.psi_plus, p, 1e-12);
  }
}

TEST(PartialTrace, DampedStateReducedByContraction) {
  const double p = 0.3;
  const auto rho = one_sided_bell_error(ChannelKind::kAmplitudeDamping, p);
  const auto rb = partial_trace(rho, kB);
  const Matrix lit = damped_literal(p);
  EXPECT_NEAR(rb(0, 0).real(), (lit(0, 0) + lit(2, 2)).real(), 1e-15);
  EXPECT_NEAR(rb(0, 0).real(), (1.0 + p) / 2.0, 1e-15);
  EXPECT_NEAR(rb(1, 1).real(), (1.0 - p) / 2.0, 1e-15);
  EXPECT_NEAR(std::abs(rb(0, 1)), 0.0, 1e-15);
}

TEST(CombinedError, HandBuiltOperatorAndFidelity) {
  const ErrorParams params{0.0, 0.1, 0.05};
  const Vector m = bell_state(BellLabel::kPsiMinus).amplitudes();
  const Vector pl = bell_state(BellLabel::kPsiPlus).amplitudes();
  Matrix expect = 0.95 * m * m.adjoint() + 0.05 * pl * pl.adjoint();
  expect(0, 0) += 0.1;
  expect(1, 1) -= 0.1;
  const auto op = combined_error_operator(params);
  EXPECT_LT(max_abs(op.matrix() - expect), 1e-15);
  const Complex f = m.dot(op.matrix() * m);
  EXPECT_NEAR(f.real(), 0.90, 1e-12);
  EXPECT_NEAR(op.trace().real(), 1.0, 1e-15);
  EXPECT_FALSE(combined_error_is_physical(params));
  EXPECT_THROW(combined_error_bell(params), NonPhysicalStateError);
}

TEST(CombinedError, ZeroErrorAndPhysicalTrace) {
  const auto rho = combined_error_bell({0.0, 0.0, 0.0});
  EXPECT_NEAR(state_fidelity(rho, bell_state(BellLabel::kPsiMinus)), 1.0, 1e-15);
  for (double eps_p : {0.1, 0.2, 0.3}) {
    for (double eps_d : {0.0, 0.05, 0.1}) {
      const ErrorParams params{0.0, eps_d, eps_p};
      if (!combined_error_is_physical(params)) continue;
      EXPECT_NEAR(combined_error_bell(params).matrix().trace().real(), 1.0, 1e-15);
    }
  }
}

TEST(InfidelitySplit, PureDampingHasNoPhasePart) {
  const auto rho = one_sided_bell_error(ChannelKind::kAmplitudeDamping, 0.3);
  const auto s = infidelity_split(rho.matrix());
  EXPECT_NEAR(s.phase, 0.0, 1e-12);
  EXPECT_NEAR(s.damping_fraction, 1.0, 1e-12);
  const auto d = infidelity_split(one_sided_bell_error(ChannelKind::kPhaseFlip, 0.2).matrix());
  EXPECT_NEAR(d.damping, 0.0, 1e-12);
  EXPECT_NEAR(d.phase, 0.2, 1e-12);
}

TEST(Storage, AnalyticDecayOfPsiMinus) {
  const DensityMatrix psi(bell_state(BellLabel::kPsiMinus));
  const StorageLifetimes a{1000.0, 2000.0};
  const StorageLifetimes b{1500.0, std::numeric_limits<double>::infinity()};
  const double t = 300.0;
  const auto out = store_pair(psi, t, a, b);
  const double ga = std::exp(-t / a.T1_ns);
  const double gb = std::exp(-t / b.T1_ns);
  EXPECT_NEAR(out(2, 2).real(), 0.5 * ga, 1e-12);
  EXPECT_NEAR(out(1, 1).real(), 0.5 * gb, 1e-12);
  EXPECT_NEAR(out(0, 0).real(), 0.5 * (1 - ga) + 0.5 * (1 - gb), 1e-12);
  const double coh = 0.5 * std::sqrt(ga * gb) * std::exp(-(t / a.Tphi_ns) * (t / a.Tphi_ns));
  EXPECT_NEAR(std::abs(out(1, 2)), coh, 1e-12);
  EXPECT_TRUE(storage_damping(t, a.T1_ns).validate().pass);
  EXPECT_TRUE(storage_dephasing(t, a.Tphi_ns).validate().pass);
}
