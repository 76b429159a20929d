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

#include "qnet/protocols/protection.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

#include "qnet/channels/bell.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/core/random.hpp"
#include "qnet/dynamics/cable_experiments.hpp"

namespace qnet {

namespace {

const Complex kI(0.0, 1.0);

struct Detunings {
  double a = 0.0;
  double b = 0.0;
};

// Standard-normal pairs per trajectory, scaled by sigma afterwards so that every
// sigma sees the same draws.
std::vector<std::pair<double, double>> unit_draws(const QuasiStaticNoise& noise) {
  std::vector<std::pair<double, double>> z(static_cast<std::size_t>(noise.n_trajectories));
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::mt19937_64 rng(derive_seed(noise.seed, i));
    std::normal_distribution<double> n01(0.0, 1.0);
    z[i].first = n01(rng);
    z[i].second = n01(rng);
  }
  return z;
}

Matrix kron2(const Matrix& a, const Matrix& b) {
  Matrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  return out;
}

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

// Free evolution for time t: phase rotation plus amplitude damping per qubit.
// The two commute, so both are applied in closed form.
void free_step(Matrix& rho, const Detunings& d, double t, const ProtectionParams& p) {
  if (t <= 0.0) return;
  Vector phase(4);
  const Complex pa = std::exp(-kI * d.a * t);
  const Complex pb = std::exp(-kI * d.b * t);
  phase << 1.0, pb, pa, pa * pb;
  rho = phase.asDiagonal() * rho * phase.conjugate().asDiagonal();
  const double pA = -std::expm1(-t / p.T1_A_ns);
  const double pB = -std::expm1(-t / p.T1_B_ns);
  auto damp = [&rho](const Matrix& e0, const Matrix& e1) {
    rho = e0 * rho * e0.adjoint() + e1 * rho * e1.adjoint();
  };
  Matrix a0 = Matrix::Identity(2, 2), a1 = Matrix::Zero(2, 2);
  a0(1, 1) = std::sqrt(1.0 - pA);
  a1(0, 1) = std::sqrt(pA);
  damp(kron2(a0, Matrix::Identity(2, 2)), kron2(a1, Matrix::Identity(2, 2)));
  Matrix b0 = Matrix::Identity(2, 2), b1 = Matrix::Zero(2, 2);
  b0(1, 1) = std::sqrt(1.0 - pB);
  b1(0, 1) = std::sqrt(pB);
  damp(kron2(Matrix::Identity(2, 2), b0), kron2(Matrix::Identity(2, 2), b1));
}

void depolarize(Matrix& rho, double p) {
  if (p <= 0.0) return;
  Matrix y = Matrix::Zero(2, 2);
  y(0, 1) = -kI;
  y(1, 0) = kI;
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const Matrix paulis[3] = {pauli_x(), y, z};
  for (int q = 0; q < 2; ++q) {
    Matrix out = (1.0 - 0.75 * p) * rho;
    for (const auto& s : paulis) {
      const Matrix e = q == 0 ? kron2(s, Matrix::Identity(2, 2)) : kron2(Matrix::Identity(2, 2), s);
      out += 0.25 * p * e * rho * e.adjoint();
    }
    rho = out;
  }
}

// Superoperator exp(L t) for H = d_a n_a + d_b n_b + (omega/2)(X I + I X) plus T1 decay,
// acting on column-stacked rho.
Matrix rabi_propagator(const Detunings& d, double omega, double t, const ProtectionParams& p) {
  const Matrix id2 = Matrix::Identity(2, 2);
  Matrix n = Matrix::Zero(2, 2);
  n(1, 1) = 1.0;
  Matrix sm = Matrix::Zero(2, 2);
  sm(0, 1) = 1.0;
  const Matrix h = d.a * kron2(n, id2) + d.b * kron2(id2, n) +
                   0.5 * omega * (kron2(pauli_x(), id2) + kron2(id2, pauli_x()));
  const Matrix id4 = Matrix::Identity(4, 4);
  // vec(A rho B) = (B^T (x) A) vec(rho) for column stacking.
  auto sup = [](const Matrix& left, const Matrix& right) {
    Matrix out(16, 16);
    const Matrix rt = right.transpose();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.block(4 * i, 4 * j, 4, 4) = rt(i, j) * left;
    return out;
  };
  Matrix l = -kI * (sup(h, id4) - sup(id4, h));
  const Matrix jumps[2] = {std::sqrt(1.0 / p.T1_A_ns) * kron2(sm, id2), std::sqrt(1.0 / p.T1_B_ns) * kron2(id2, sm)};
  for (const auto& j : jumps) {
    const Matrix jdj = j.adjoint() * j;
    l += sup(j, j.adjoint()) - 0.5 * sup(jdj, id4) - 0.5 * sup(id4, jdj);
  }
  return (l * t).exp();
}

enum class Mode { kFree, kDD, kRabi };

using TrajectoryFn = std::function<std::vector<Matrix>(const Detunings&)>;

ProtectionSeries run_ensemble(const DensityMatrix& rho0, const QuasiStaticNoise& noise,
                              const ProtectionParams& params, const TrajectoryFn& fn) {
  const auto z = unit_draws(noise);
  const std::size_t n_traj = z.size();
  std::vector<std::vector<Matrix>> per(n_traj);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n_traj; i += stride) {
      per[i] = fn({noise.sigma * z[i].first, noise.sigma * z[i].second});
    }
  };
  const auto threads = static_cast<std::size_t>(std::max(1, params.threads));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }

  const Vector target = bell_state(BellLabel::kPsiMinus, rho0.space().labels()).amplitudes();
  const std::size_t n_samples = per.front().size();
  ProtectionSeries out;
  out.n_traj = static_cast<int>(n_traj);
  for (std::size_t k = 0; k < n_samples; ++k) {
    double sum = 0.0, sum2 = 0.0;
    Matrix mean = Matrix::Zero(4, 4);
    for (std::size_t i = 0; i < n_traj; ++i) {
      const double f = target.dot(per[i][k] * target).real();
      sum += f;
      sum2 += f * f;
      mean += per[i][k];
    }
    const double n = static_cast<double>(n_traj);
    const double m = sum / n;
    const double var = n > 1 ? std::max(0.0, (sum2 - n * m * m) / (n - 1.0)) : 0.0;
    out.t_ns.push_back(static_cast<double>(k) * params.sample_every_ns);
    out.fidelity_mean.push_back(m);
    out.fidelity_stderr.push_back(std::sqrt(var / n));
    out.mean_state.push_back(mean / n);
  }
  return out;
}

std::size_t sample_count(const ProtectionParams& p) {
  const double ratio = p.total_time_ns / p.sample_every_ns;
  const auto n = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(n)) > 1e-9) {
    throw InvalidArgument("protection: total time must be a multiple of the sampling interval");
  }
  return n;
}

void check_input(const DensityMatrix& rho0) {
  if (rho0.space().dims() != std::vector<std::size_t>{2, 2}) {
    throw DimensionError("protection: expected a two-qubit state");
  }
}

}  // namespace

void QuasiStaticNoise::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("noise: sigma must be >= 0");
  if (n_trajectories < 1) throw InvalidArgument("noise: need at least one trajectory");
}

double QuasiStaticNoise::sigma_from_dephasing_time(double Tphi_ns) {
  if (!(Tphi_ns > 0.0)) throw InvalidArgument("noise: T_phi must be positive");
  return std::sqrt(2.0) / Tphi_ns;
}

void ProtectionParams::validate() const {
  if (!(total_time_ns >= 0.0 && sample_every_ns > 0.0)) throw InvalidArgument("protection: invalid time grid");
  if (!(T1_A_ns > 0.0 && T1_B_ns > 0.0)) throw InvalidArgument("protection: T1 must be positive");
  if (!(dd_slot_ns > 0.0 && dd_pulse_offset_ns >= 0.0 && dd_pulse_offset_ns <= dd_slot_ns)) {
    throw InvalidArgument("protection: invalid DD slot");
  }
  if (!(gate_depolarizing >= 0.0 && gate_depolarizing <= 1.0)) {
    throw InvalidArgument("protection: gate depolarizing strength outside [0,1]");
  }
}

ProtectionSeries protect_free(const DensityMatrix& rho0, const QuasiStaticNoise& noise,
                              const ProtectionParams& params) {
  check_input(rho0);
  noise.validate();
  params.validate();
  const std::size_t n = sample_count(params);
  return run_ensemble(rho0, noise, params, [&](const Detunings& d) {
    std::vector<Matrix> states;
    for (std::size_t k = 0; k <= n; ++k) {
      Matrix rho = rho0.matrix();
      free_step(rho, d, static_cast<double>(k) * params.sample_every_ns, params);
      states.push_back(rho);
    }
    return states;
  });
}

ProtectionSeries protect_dd(const DensityMatrix& rho0, const QuasiStaticNoise& noise,
                            const ProtectionParams& params) {
  check_input(rho0);
  noise.validate();
  params.validate();
  const double cycle = 2.0 * params.dd_slot_ns;
  if (std::abs(params.sample_every_ns - cycle) > 1e-9) {
    throw InvalidArgument("protection: DD is sampled once per cycle of two slots");
  }
  const std::size_t n = sample_count(params);
  const Matrix xx = kron2(pauli_x(), pauli_x());
  const double t1 = params.dd_pulse_offset_ns;
  const double t2 = params.dd_slot_ns;
  const double t3 = params.dd_slot_ns - params.dd_pulse_offset_ns;
  return run_ensemble(rho0, noise, params, [&](const Detunings& d) {
    std::vector<Matrix> states{rho0.matrix()};
    Matrix rho = rho0.matrix();
    for (std::size_t k = 0; k < n; ++k) {
      free_step(rho, d, t1, params);
      rho = xx * rho * xx;
      depolarize(rho, params.gate_depolarizing);
      free_step(rho, d, t2, params);
      rho = xx * rho * xx;
      depolarize(rho, params.gate_depolarizing);
      free_step(rho, d, t3, params);
      states.push_back(rho);
    }
    return states;
  });
}

ProtectionSeries protect_rabi(const DensityMatrix& rho0, double omega, const QuasiStaticNoise& noise,
                              const ProtectionParams& params) {
  check_input(rho0);
  noise.validate();
  params.validate();
  if (!(omega >= 0.0)) throw InvalidArgument("protection: drive strength must be >= 0");
  const std::size_t n = sample_count(params);
  return run_ensemble(rho0, noise, params, [&](const Detunings& d) {
    const Matrix prop = rabi_propagator(d, omega, params.sample_every_ns, params);
    std::vector<Matrix> states{rho0.matrix()};
    Vector v = Eigen::Map<const Vector>(rho0.matrix().data(), 16);
    for (std::size_t k = 0; k < n; ++k) {
      v = prop * v;
      states.push_back(Eigen::Map<const Matrix>(v.data(), 4, 4));
    }
    return states;
  });
}

double calibrate_sigma(const DensityMatrix& rho0, double target_fidelity, double t_ns,
                       QuasiStaticNoise noise, ProtectionParams params) {
  params.total_time_ns = t_ns;
  params.sample_every_ns = t_ns;
  auto fidelity_at = [&](double sigma) {
    noise.sigma = sigma;
    return protect_free(rho0, noise, params).fidelity_mean.back();
  };
  double lo = 0.0;
  if (fidelity_at(lo) < target_fidelity) {
    throw NumericError("calibrate_sigma: target fidelity is above the noise-free value");
  }
  double hi = 1e-4;
  while (fidelity_at(hi) > target_fidelity) {
    hi *= 2.0;
    if (hi > 1.0) throw NumericError("calibrate_sigma: target fidelity not reachable");
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (fidelity_at(mid) > target_fidelity ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double effective_t2(const ProtectionSeries& series) {
  std::vector<double> t, c;
  for (std::size_t k = 0; k < series.t_ns.size(); ++k) {
    t.push_back(series.t_ns[k]);
    c.push_back(std::abs(series.mean_state[k](2, 1)));
  }
  const auto fit = fit_exponential(t, c);
  if (!(fit.rate > 0.0)) throw NumericError("effective_t2: coherence does not decay");
  return 2.0 / fit.rate;
}

void write_protection_csv(std::ostream& out, const ProtectionSeries& s) {
  out << "t_ns,fidelity_mean,fidelity_stderr,n_traj\n" << std::setprecision(12);
  for (std::size_t k = 0; k < s.t_ns.size(); ++k) {
    out << s.t_ns[k] << ',' << s.fidelity_mean[k] << ',' << s.fidelity_stderr[k] << ',' << s.n_traj << '\n';
  }
}

}  // namespace qnet
