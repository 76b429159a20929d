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

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "qnet/core/space.hpp"
#include "qnet/core/tolerances.hpp"

namespace qnet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense square operator over a CompositeSpace. Immutable.
class ComplexOperator {
 public:
  ComplexOperator(CompositeSpace space, Matrix entries);

  static ComplexOperator identity(const CompositeSpace& space);
  static ComplexOperator zero(const CompositeSpace& space);

  const CompositeSpace& space() const { return space_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dimension() const { return space_.dimension(); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  ComplexOperator adjoint() const { return {space_, m_.adjoint()}; }
  Complex trace() const { return m_.trace(); }
  double hermiticity_error() const;
  bool is_unitary(double tol = Tolerances::defaults().unitarity) const;

  ComplexOperator operator*(const ComplexOperator& rhs) const;
  ComplexOperator operator+(const ComplexOperator& rhs) const;
  ComplexOperator operator-(const ComplexOperator& rhs) const;
  ComplexOperator scaled(Complex s) const { return {space_, s * m_}; }

  /// Same matrix, new labels; dims must agree.
  ComplexOperator relabeled(CompositeSpace space) const;

 private:
  CompositeSpace space_;
  Matrix m_;
};

/// Normalized state vector.
class PureState {
 public:
  PureState(CompositeSpace space, Vector amplitudes,
            const Tolerances& tol = Tolerances::defaults());

  /// Normalizes instead of validating; throws DegenerateInputError on a zero vector.
  static PureState normalized(CompositeSpace space, Vector amplitudes);
  static PureState basis(const CompositeSpace& space, std::size_t index);

  const CompositeSpace& space() const { return space_; }
  const Vector& amplitudes() const { return psi_; }
  std::size_t dimension() const { return space_.dimension(); }

  /// |psi><psi| as a raw operator.
  ComplexOperator projector() const;
  PureState with_global_phase(double phase) const;

 private:
  CompositeSpace space_;
  Vector psi_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. Construction validates.
class DensityMatrix {
 public:
  DensityMatrix(CompositeSpace space, Matrix entries,
                const Tolerances& tol = Tolerances::defaults());
  explicit DensityMatrix(const ComplexOperator& op,
                         const Tolerances& tol = Tolerances::defaults());
  explicit DensityMatrix(const PureState& psi);

  static DensityMatrix maximally_mixed(const CompositeSpace& space);

  /// Symmetrizes (A + A^dagger)/2 before validating; used after integration
  /// steps where only round-off breaks Hermiticity.
  static DensityMatrix from_hermitized(CompositeSpace space, const Matrix& entries,
                                       const Tolerances& tol = Tolerances::defaults());

  const CompositeSpace& space() const { return space_; }
  const Matrix& matrix() const { return m_; }
  std::size_t dimension() const { return space_.dimension(); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  ComplexOperator as_operator() const { return {space_, m_}; }
  double purity() const;
  double population(std::size_t index) const { return m_(index, index).real(); }
  RealVector eigenvalues() const;

  DensityMatrix relabeled(CompositeSpace space) const;

 private:
  CompositeSpace space_;
  Matrix m_;
};

struct PhysicalityReport {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
};

PhysicalityReport check_physical(const Matrix& m, const Tolerances& tol = Tolerances::defaults());

}  // namespace qnet
