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

#include "qnet/tomography/process_tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnet/core/errors.hpp"
#include "qnet/core/random.hpp"

namespace qnet {

namespace {

const Complex kI(0.0, 1.0);

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

Matrix pauli(int k) {
  Eigen::Matrix2cd p;
  switch (k) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, -kI, kI, 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

Matrix pauli_string(std::size_t index, std::size_t n) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) out = kron(out, pauli(static_cast<int>((index >> (2 * (n - 1 - q))) & 3U)));
  return out;
}

Eigen::Matrix2cd preparation_matrix(const std::string& gate) {
  const double c = std::cos(std::numbers::pi / 4.0);
  const double s = std::sin(std::numbers::pi / 4.0);
  Eigen::Matrix2cd m;
  if (gate == "I") {
    m << 1, 0, 0, 1;
  } else if (gate == "X") {
    m << 0, -kI, -kI, 0;
  } else if (gate == "X/2") {
    m << c, -kI * s, -kI * s, c;
  } else if (gate == "Y/2") {
    m << c, -s, s, c;
  } else {
    throw InvalidArgument("unknown preparation gate: " + gate);
  }
  return m;
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

ChiMatrix chi_from_superoperator(const Matrix& s, std::size_t n) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  const Eigen::Index d2 = d * d;
  std::vector<Matrix> p;
  for (Eigen::Index k = 0; k < d2; ++k) p.push_back(pauli_string(static_cast<std::size_t>(k), n));
  ChiMatrix chi{n, Matrix::Zero(d2, d2)};
  for (Eigen::Index m = 0; m < d2; ++m) {
    for (Eigen::Index k = 0; k < d2; ++k) {
      const Matrix basis = kron(p[static_cast<std::size_t>(k)].conjugate(), p[static_cast<std::size_t>(m)]);
      chi.entries(m, k) = (basis.conjugate().cwiseProduct(s)).sum() / static_cast<double>(d2);
    }
  }
  return chi;
}

}  // namespace

std::string ChiMatrix::basis_label(std::size_t index) const {
  static const char* names = "IXYZ";
  std::string out;
  for (std::size_t q = 0; q < n_qubits; ++q) out += names[(index >> (2 * (n_qubits - 1 - q))) & 3U];
  return out;
}

double ChiMatrix::trace_error() const { return std::abs(entries.trace() - Complex(1.0, 0.0)); }

double ChiMatrix::hermiticity_error() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }

RealVector ChiMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (entries + entries.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::vector<std::string> preparation_gates() { return {"I", "X", "X/2", "Y/2"}; }

ChiMatrix process_tomography(const ProcessMap& process, const std::vector<std::string>& labels,
                             const ProcessTomographyOptions& options) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("process_tomography: no qubit labels");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  const Eigen::Index d2 = d * d;
  const VisibilityMatrix vis = options.vis.qubits.empty() ? VisibilityMatrix::perfect(n) : options.vis;
  if (vis.size() != n) throw InvalidArgument("process_tomography: visibility count does not match labels");
  const auto gates = preparation_gates();
  const CompositeSpace space = CompositeSpace::qubits(labels);

  Matrix inputs(d2, d2);
  Matrix outputs(d2, d2);
  for (Eigen::Index j = 0; j < d2; ++j) {
    Matrix v = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
      v = kron(v, preparation_matrix(gates[(static_cast<std::size_t>(j) >> (2 * (n - 1 - q))) & 3U]));
    }
    const Vector psi = v.col(0);
    const DensityMatrix rho_in(space, psi * psi.adjoint());
    const DensityMatrix rho_out = process(rho_in);
    if (rho_out.dimension() != static_cast<std::size_t>(d)) {
      throw DimensionError("process_tomography: process changed the dimension");
    }
    MeasurementOptions m = options.measurement;
    m.seed = derive_seed(options.measurement.seed, static_cast<std::uint64_t>(j));
    const DensityMatrix est = state_tomography(rho_out.relabeled(space), vis, m);
    inputs.col(j) = vec(rho_in.matrix());
    outputs.col(j) = vec(est.matrix());
  }
  Eigen::FullPivLU<Matrix> lu(inputs);
  if (lu.rank() != d2) throw NumericError("process_tomography: preparation set is not informationally complete");
  const Matrix s = outputs * lu.inverse();
  return chi_from_superoperator(s, n);
}

ChiMatrix chi_of_unitary(const Matrix& u) {
  std::size_t n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  if (u.rows() != u.cols() || (Eigen::Index{1} << n) != u.rows()) {
    throw DimensionError("chi_of_unitary: expected a 2^n x 2^n matrix");
  }
  const Eigen::Index d2 = u.rows() * u.rows();
  Vector coeff(d2);
  for (Eigen::Index m = 0; m < d2; ++m) {
    coeff(m) = (pauli_string(static_cast<std::size_t>(m), n).adjoint() * u).trace() / static_cast<double>(u.rows());
  }
  return {n, coeff * coeff.adjoint()};
}

double process_fidelity(const ChiMatrix& chi_ideal, const ChiMatrix& chi_exp) {
  if (chi_ideal.entries.rows() != chi_exp.entries.rows() || chi_ideal.entries.cols() != chi_exp.entries.cols()) {
    throw DimensionError("process_fidelity: chi dimensions differ");
  }
  const double f = (chi_ideal.entries * chi_exp.entries).trace().real();
  return std::clamp(f, 0.0, 1.0);
}

nlohmann::json to_json(const ChiMatrix& chi) {
  nlohmann::json j;
  std::vector<std::string> basis;
  for (Eigen::Index k = 0; k < chi.entries.rows(); ++k) basis.push_back(chi.basis_label(static_cast<std::size_t>(k)));
  j["basis"] = basis;
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index r = 0; r < chi.entries.rows(); ++r) {
    std::vector<double> rr;
    std::vector<double> ii;
    for (Eigen::Index c = 0; c < chi.entries.cols(); ++c) {
      rr.push_back(chi.entries(r, c).real());
      ii.push_back(chi.entries(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

}  // namespace qnet
