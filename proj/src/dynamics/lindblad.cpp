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

#include "qnet/dynamics/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"

namespace qnet {

CollapseSet& CollapseSet::add(ComplexOperator op, double rate, std::string name) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    throw InvalidArgument("collapse rate for '" + name + "' must be finite and >= 0");
  }
  terms_.push_back({std::move(op), rate, std::move(name)});
  return *this;
}

namespace {

struct Liouvillian {
  Matrix h_eff;             // H - (i/2) sum rate L^dag L
  std::vector<Matrix> jumps;  // sqrt(rate) L

  Matrix apply(const Matrix& rho) const {
    const Complex mi(0.0, -1.0);
    Matrix out = mi * (h_eff * rho);
    out += (mi * (h_eff * rho)).adjoint();
    for (const auto& j : jumps) out += j * rho * j.adjoint();
    return out;
  }
};

Liouvillian make_liouvillian(const Generator& g, const CompositeSpace& space) {
  if (!(g.hamiltonian.space() == space)) {
    throw DimensionError("hamiltonian space " + g.hamiltonian.space().describe() +
                         " does not match state space " + space.describe());
  }
  Liouvillian l;
  l.h_eff = g.hamiltonian.matrix();
  for (const auto& term : g.collapse.terms()) {
    if (!(term.op.space() == space)) throw DimensionError("collapse operator '" + term.name + "': space mismatch");
    if (term.rate == 0.0) continue;
    const Matrix j = std::sqrt(term.rate) * term.op.matrix();
    l.h_eff -= Complex(0.0, 0.5) * (j.adjoint() * j);
    l.jumps.push_back(j);
  }
  return l;
}

void rk4_interval(const Liouvillian& l, Matrix& rho, double length, double dt) {
  if (length <= 0.0) return;
  const auto n = static_cast<long>(std::ceil(length / dt - 1e-9));
  const double h = length / static_cast<double>(std::max(1L, n));
  for (long s = 0; s < std::max(1L, n); ++s) {
    const Matrix k1 = l.apply(rho);
    const Matrix k2 = l.apply(rho + (0.5 * h) * k1);
    const Matrix k3 = l.apply(rho + (0.5 * h) * k2);
    const Matrix k4 = l.apply(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
}

void check_grid(std::span<const double> grid, double t_end) {
  if (grid.empty()) throw InvalidArgument("lindblad_evolve: empty time grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0) throw InvalidArgument("lindblad_evolve: grid times must be >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidArgument("lindblad_evolve: grid must be strictly increasing");
  }
  if (grid.back() > t_end + 1e-9) {
    std::ostringstream os;
    os << "lindblad_evolve: grid extends to " << grid.back() << " ns beyond schedule end " << t_end << " ns";
    throw InvalidArgument(os.str());
  }
}

DensityMatrix finish_state(const CompositeSpace& space, const Matrix& rho, double t, double cleanup_tol) {
  std::ostringstream os;
  os << "at t = " << t << " ns: ";
  if (!rho.allFinite()) throw IntegrationError(os.str() + "integration diverged");
  const Matrix sym = 0.5 * (rho + rho.adjoint());
  const auto report = check_physical(sym);
  if (report.ok) return DensityMatrix(space, sym);
  // Truncation error can push eigenvalues of rank-deficient states slightly negative.
  if (report.min_eigenvalue >= -cleanup_tol && report.trace_error <= cleanup_tol) {
    return nearest_physical_state(ComplexOperator(space, sym));
  }
  os << "state left the physical set (hermiticity error " << report.hermiticity_error
     << ", trace error " << report.trace_error << ", min eigenvalue " << report.min_eigenvalue << ")";
  throw IntegrationError(os.str());
}

std::vector<Matrix> integrate(const PulseSchedule& schedule, const GeneratorBuilder& builder,
                              const DensityMatrix& rho0, std::span<const double> grid, double dt) {
  const auto& space = rho0.space();
  std::vector<Matrix> out;
  out.reserve(grid.size());
  Matrix rho = rho0.matrix();
  double t = 0.0;
  std::size_t next = 0;
  while (next < grid.size() && grid[next] <= 0.0) {
    out.push_back(rho);
    ++next;
  }
  for (const auto& seg : schedule.segments()) {
    if (next == grid.size()) break;
    const double seg_end = t + seg.duration_ns;
    const Liouvillian l = make_liouvillian(builder(seg.controls), space);
    while (next < grid.size() && grid[next] <= seg_end + 1e-9) {
      rk4_interval(l, rho, grid[next] - t, dt);
      t = grid[next];
      out.push_back(rho);
      ++next;
    }
    rk4_interval(l, rho, seg_end - t, dt);
    t = seg_end;
  }
  return out;
}

}  // namespace

Trajectory lindblad_evolve(const PulseSchedule& schedule, const GeneratorBuilder& builder,
                           const DensityMatrix& rho0, std::span<const double> t_grid,
                           const IntegratorOptions& options) {
  if (!(options.dt_ns > 0.0)) throw InvalidArgument("lindblad_evolve: dt must be positive");
  check_grid(t_grid, schedule.total_duration());
  auto raw = integrate(schedule, builder, rho0, t_grid, options.dt_ns);

  Trajectory traj;
  if (options.richardson_check) {
    const auto fine = integrate(schedule, builder, rho0, t_grid, 0.5 * options.dt_ns);
    for (std::size_t i = 0; i < raw.size(); ++i)
      traj.richardson_error = std::max(traj.richardson_error, (raw[i] - fine[i]).cwiseAbs().maxCoeff());
    if (!(traj.richardson_error <= options.richardson_tol)) {
      std::ostringstream os;
      os << "step halving changed the state by " << traj.richardson_error << " (tolerance "
         << options.richardson_tol << ", dt " << options.dt_ns << " ns)";
      throw IntegrationError(os.str());
    }
  }
  traj.t_ns.assign(t_grid.begin(), t_grid.end());
  for (std::size_t i = 0; i < raw.size(); ++i)
    traj.states.push_back(finish_state(rho0.space(), raw[i], t_grid[i], options.cleanup_tol));
  return traj;
}

Trajectory lindblad_evolve(const Generator& generator, const DensityMatrix& rho0,
                           std::span<const double> t_grid, const IntegratorOptions& options) {
  if (t_grid.empty()) throw InvalidArgument("lindblad_evolve: empty time grid");
  PulseSchedule schedule;
  if (t_grid.back() > 0.0) schedule.add(t_grid.back(), {}, "constant");
  const GeneratorBuilder builder = [&generator](const SegmentControls&) { return generator; };
  return lindblad_evolve(schedule, builder, rho0, t_grid, options);
}

DensityMatrix lindblad_final(const PulseSchedule& schedule, const GeneratorBuilder& builder,
                             const DensityMatrix& rho0, const IntegratorOptions& options) {
  const double grid[1] = {schedule.total_duration()};
  auto traj = lindblad_evolve(schedule, builder, rho0, grid, options);
  return traj.states.back();
}

}  // namespace qnet
