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

#include "qnet/core/types.hpp"

#include <cmath>
#include <sstream>

#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

void require_square(const CompositeSpace& space, const Matrix& m, const char* what) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols() << " but space " << space.describe()
       << " has dimension " << n;
    throw DimensionError(os.str());
  }
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

PhysicalityReport check_physical(const Matrix& m, const Tolerances& tol) {
  PhysicalityReport r;
  r.hermiticity_error = max_abs(m - m.adjoint());
  r.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.ok = r.hermiticity_error <= tol.hermiticity && r.trace_error <= tol.trace &&
         r.min_eigenvalue >= tol.min_eigenvalue;
  return r;
}

// ---- ComplexOperator ----

ComplexOperator::ComplexOperator(CompositeSpace space, Matrix entries)
    : space_(std::move(space)), m_(std::move(entries)) {
  require_square(space_, m_, "ComplexOperator");
}

ComplexOperator ComplexOperator::identity(const CompositeSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  return {space, Matrix::Identity(n, n)};
}

ComplexOperator ComplexOperator::zero(const CompositeSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  return {space, Matrix::Zero(n, n)};
}

double ComplexOperator::hermiticity_error() const { return max_abs(m_ - m_.adjoint()); }

bool ComplexOperator::is_unitary(double tol) const {
  const auto n = m_.rows();
  return max_abs(m_.adjoint() * m_ - Matrix::Identity(n, n)) <= tol;
}

ComplexOperator ComplexOperator::operator*(const ComplexOperator& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionError("operator product: space mismatch");
  return {space_, m_ * rhs.m_};
}

ComplexOperator ComplexOperator::operator+(const ComplexOperator& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionError("operator sum: space mismatch");
  return {space_, m_ + rhs.m_};
}

ComplexOperator ComplexOperator::operator-(const ComplexOperator& rhs) const {
  if (!(space_ == rhs.space_)) throw DimensionError("operator difference: space mismatch");
  return {space_, m_ - rhs.m_};
}

ComplexOperator ComplexOperator::relabeled(CompositeSpace space) const {
  if (space.dims() != space_.dims()) throw DimensionError("relabel: dims differ");
  return {std::move(space), m_};
}

// ---- PureState ----

PureState::PureState(CompositeSpace space, Vector amplitudes, const Tolerances& tol)
    : space_(std::move(space)), psi_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(psi_.size()) != space_.dimension()) {
    throw DimensionError("PureState: amplitude count does not match " + space_.describe());
  }
  const double norm = psi_.norm();
  if (std::abs(norm - 1.0) > tol.pure_norm) {
    throw NonPhysicalStateError("PureState: norm " + std::to_string(norm) + " is not 1");
  }
}

PureState PureState::normalized(CompositeSpace space, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw DegenerateInputError("PureState: zero vector");
  return {std::move(space), amplitudes / norm};
}

PureState PureState::basis(const CompositeSpace& space, std::size_t index) {
  if (index >= space.dimension()) throw DimensionError("PureState::basis: index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {space, std::move(v)};
}

ComplexOperator PureState::projector() const { return {space_, psi_ * psi_.adjoint()}; }

PureState PureState::with_global_phase(double phase) const {
  return {space_, std::polar(1.0, phase) * psi_};
}

// ---- DensityMatrix ----

DensityMatrix::DensityMatrix(CompositeSpace space, Matrix entries, const Tolerances& tol)
    : space_(std::move(space)), m_(std::move(entries)) {
  require_square(space_, m_, "DensityMatrix");
  const auto report = check_physical(m_, tol);
  if (!report.ok) {
    std::ostringstream os;
    os << "DensityMatrix invariants violated: hermiticity error " << report.hermiticity_error
       << ", trace error " << report.trace_error << ", min eigenvalue " << report.min_eigenvalue;
    throw NonPhysicalStateError(os.str());
  }
}

DensityMatrix::DensityMatrix(const ComplexOperator& op, const Tolerances& tol)
    : DensityMatrix(op.space(), op.matrix(), tol) {}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(psi.space(), psi.amplitudes() * psi.amplitudes().adjoint()) {}

DensityMatrix DensityMatrix::maximally_mixed(const CompositeSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dimension());
  return {space, Matrix::Identity(n, n) / static_cast<double>(n)};
}

DensityMatrix DensityMatrix::from_hermitized(CompositeSpace space, const Matrix& entries,
                                             const Tolerances& tol) {
  return {std::move(space), 0.5 * (entries + entries.adjoint()), tol};
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

RealVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

DensityMatrix DensityMatrix::relabeled(CompositeSpace space) const {
  if (space.dims() != space_.dims()) throw DimensionError("relabel: dims differ");
  return {std::move(space), m_};
}

}  // namespace qnet
