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

#include "qnet/core/ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qnet/core/errors.hpp"

namespace qnet {

namespace {

// Full-space index for every (rest, group) pair, where `group` is a subset of
// labels in caller order and `rest` the remaining subsystems in space order.
struct IndexSplit {
  std::size_t n_group = 1;
  std::size_t n_rest = 1;
  std::vector<std::size_t> table;  // table[rest * n_group + group]

  std::size_t at(std::size_t rest, std::size_t group) const { return table[rest * n_group + group]; }
};

IndexSplit split_space(const CompositeSpace& space, std::span<const std::string> group) {
  std::vector<std::size_t> group_pos;
  std::vector<bool> in_group(space.size(), false);
  for (const auto& l : group) {
    const auto p = space.index_of(l);
    if (in_group[p]) throw LabelError("label '" + l + "' listed twice");
    in_group[p] = true;
    group_pos.push_back(p);
  }
  std::vector<std::size_t> rest_pos;
  for (std::size_t p = 0; p < space.size(); ++p)
    if (!in_group[p]) rest_pos.push_back(p);

  const auto& dims = space.dims();
  IndexSplit s;
  for (auto p : group_pos) s.n_group *= dims[p];
  for (auto p : rest_pos) s.n_rest *= dims[p];
  s.table.resize(s.n_group * s.n_rest);

  std::vector<std::size_t> digits(space.size());
  for (std::size_t r = 0; r < s.n_rest; ++r) {
    std::size_t rr = r;
    for (std::size_t k = rest_pos.size(); k-- > 0;) {
      digits[rest_pos[k]] = rr % dims[rest_pos[k]];
      rr /= dims[rest_pos[k]];
    }
    for (std::size_t g = 0; g < s.n_group; ++g) {
      std::size_t gg = g;
      for (std::size_t k = group_pos.size(); k-- > 0;) {
        digits[group_pos[k]] = gg % dims[group_pos[k]];
        gg /= dims[group_pos[k]];
      }
      s.table[r * s.n_group + g] = space.compose(digits);
    }
  }
  return s;
}

void require_same_space(const CompositeSpace& a, const CompositeSpace& b, const char* what) {
  if (!(a == b)) {
    throw DimensionError(std::string(what) + ": space mismatch " + a.describe() + " vs " +
                         b.describe());
  }
}

Matrix embed_matrix(const Matrix& op, std::span<const std::string> targets,
                    const CompositeSpace& full) {
  const auto split = split_space(full, targets);
  if (static_cast<std::size_t>(op.rows()) != split.n_group || op.rows() != op.cols()) {
    std::ostringstream os;
    os << "embed: operator is " << op.rows() << "x" << op.cols() << " but targets span dimension "
       << split.n_group;
    throw DimensionError(os.str());
  }
  const auto n = static_cast<Eigen::Index>(full.dimension());
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t r = 0; r < split.n_rest; ++r) {
    for (std::size_t a = 0; a < split.n_group; ++a) {
      const auto row = static_cast<Eigen::Index>(split.at(r, a));
      for (std::size_t b = 0; b < split.n_group; ++b) {
        out(row, static_cast<Eigen::Index>(split.at(r, b))) =
            op(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  return out;
}

Matrix partial_trace_matrix(const Matrix& m, const CompositeSpace& space,
                            std::span<const std::string> keep) {
  const auto split = split_space(space, keep);
  const auto k = static_cast<Eigen::Index>(split.n_group);
  Matrix out = Matrix::Zero(k, k);
  for (std::size_t r = 0; r < split.n_rest; ++r) {
    for (std::size_t a = 0; a < split.n_group; ++a) {
      const auto row = static_cast<Eigen::Index>(split.at(r, a));
      for (std::size_t b = 0; b < split.n_group; ++b) {
        out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            m(row, static_cast<Eigen::Index>(split.at(r, b)));
      }
    }
  }
  return out;
}

Matrix permute_matrix(const Matrix& m, const CompositeSpace& space,
                      std::span<const std::string> order) {
  if (order.size() != space.size()) throw LabelError("permute: order must list every label");
  const auto split = split_space(space, order);  // n_rest == 1
  const auto n = static_cast<Eigen::Index>(space.dimension());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto oi = static_cast<Eigen::Index>(split.at(0, static_cast<std::size_t>(i)));
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = m(oi, static_cast<Eigen::Index>(split.at(0, static_cast<std::size_t>(j))));
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix channel_matrix(const Matrix& rho, const CompositeSpace& space, const KrausChannel& ch,
                      std::span<const std::string> targets) {
  const auto report = ch.validate();
  if (!report.pass) {
    throw InvalidArgument("channel '" + ch.name() + "' is not complete (deviation " +
                          std::to_string(report.max_deviation) + ")");
  }
  const auto sub = space.subspace(targets);
  if (sub.dims() != ch.dims()) throw DimensionError("channel '" + ch.name() + "': target dims differ");
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& e : ch.operators()) {
    const Matrix full = embed_matrix(e, targets, space);
    out += full * rho * full.adjoint();
  }
  return out;
}

}  // namespace

ComplexOperator tensor_product(const ComplexOperator& a, const ComplexOperator& b) {
  auto space = a.space().concat(b.space());
  return {std::move(space), kron(a.matrix(), b.matrix())};
}

PureState tensor_product(const PureState& a, const PureState& b) {
  auto space = a.space().concat(b.space());
  Vector v(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    v.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  return PureState::normalized(std::move(space), std::move(v));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  auto space = a.space().concat(b.space());
  return DensityMatrix::from_hermitized(std::move(space), kron(a.matrix(), b.matrix()));
}

ComplexOperator embed(const ComplexOperator& op, std::span<const std::string> target_labels,
                      const CompositeSpace& full_space) {
  const auto sub = full_space.subspace(target_labels);
  if (sub.dims() != op.space().dims()) {
    throw DimensionError("embed: operator dims do not match target subsystems " + sub.describe());
  }
  return {full_space, embed_matrix(op.matrix(), target_labels, full_space)};
}

ComplexOperator embed(const Matrix& op, std::span<const std::string> target_labels,
                      const CompositeSpace& full_space) {
  return {full_space, embed_matrix(op, target_labels, full_space)};
}

ComplexOperator permute(const ComplexOperator& op, std::span<const std::string> order) {
  return {op.space().subspace(order), permute_matrix(op.matrix(), op.space(), order)};
}

DensityMatrix permute(const DensityMatrix& rho, std::span<const std::string> order) {
  return DensityMatrix::from_hermitized(rho.space().subspace(order),
                                        permute_matrix(rho.matrix(), rho.space(), order));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep_labels) {
  if (keep_labels.empty()) throw LabelError("partial_trace: nothing to keep");
  return DensityMatrix::from_hermitized(rho.space().subspace(keep_labels),
                                        partial_trace_matrix(rho.matrix(), rho.space(), keep_labels));
}

ComplexOperator partial_trace(const ComplexOperator& op, std::span<const std::string> keep_labels) {
  if (keep_labels.empty()) throw LabelError("partial_trace: nothing to keep");
  return {op.space().subspace(keep_labels),
          partial_trace_matrix(op.matrix(), op.space(), keep_labels)};
}

Complex expectation(const ComplexOperator& op, const PureState& psi) {
  require_same_space(op.space(), psi.space(), "expectation");
  return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

double state_fidelity(const DensityMatrix& rho, const PureState& target) {
  require_same_space(rho.space(), target.space(), "state_fidelity");
  const double f = target.amplitudes().dot(rho.matrix() * target.amplitudes()).real();
  const double slack = Tolerances::defaults().fidelity_clamp;
  if (f < -slack || f > 1.0 + slack) {
    throw NumericError("state_fidelity: value " + std::to_string(f) + " outside [0,1]");
  }
  return std::clamp(f, 0.0, 1.0);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            std::span<const std::string> targets) {
  return DensityMatrix::from_hermitized(rho.space(),
                                        channel_matrix(rho.matrix(), rho.space(), ch, targets));
}

ComplexOperator apply_channel(const ComplexOperator& rho, const KrausChannel& ch,
                              std::span<const std::string> targets) {
  return {rho.space(), channel_matrix(rho.matrix(), rho.space(), ch, targets)};
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u,
                            std::span<const std::string> targets) {
  const Matrix full = embed_matrix(u, targets, rho.space());
  return DensityMatrix::from_hermitized(rho.space(), full * rho.matrix() * full.adjoint());
}

ComplexOperator apply_unitary(const ComplexOperator& rho, const Matrix& u,
                              std::span<const std::string> targets) {
  const Matrix full = embed_matrix(u, targets, rho.space());
  return {rho.space(), full * rho.matrix() * full.adjoint()};
}

DensityMatrix nearest_physical_state(const ComplexOperator& h) {
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  RealVector w = es.eigenvalues().cwiseMax(0.0);
  const double total = w.sum();
  if (!(total > 0.0)) {
    throw DegenerateInputError("nearest_physical_state: zero trace after clipping");
  }
  w /= total;
  const Matrix& v = es.eigenvectors();
  Matrix out = v * w.cast<Complex>().asDiagonal() * v.adjoint();
  return DensityMatrix::from_hermitized(h.space(), out);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_space(a.space(), b.space(), "trace_distance");
  const Matrix d = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double uhlmann_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_same_space(a.space(), b.space(), "uhlmann_fidelity");
  Eigen::SelfAdjointEigenSolver<Matrix> ea(a.matrix());
  const RealVector sw = ea.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix sqrt_a = ea.eigenvectors() * sw.cast<Complex>().asDiagonal() * ea.eigenvectors().adjoint();
  const Matrix inner = sqrt_a * b.matrix() * sqrt_a;
  Eigen::SelfAdjointEigenSolver<Matrix> ei(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double s = ei.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(s * s, 0.0, 1.0);
}

}  // namespace qnet
