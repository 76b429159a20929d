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

#include "qnet/tomography/state_tomography.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "qnet/core/errors.hpp"
#include "qnet/core/ops.hpp"
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

Matrix setting_unitary(const TomoSetting& setting) {
  Matrix u = Matrix::Identity(1, 1);
  for (auto r : setting) u = kron(u, rotation_matrix(r));
  return u;
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

Matrix pauli_string(std::size_t index, std::size_t n_qubits) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    const std::size_t shift = 2 * (n_qubits - 1 - q);
    out = kron(out, pauli(static_cast<int>((index >> shift) & 3U)));
  }
  return out;
}

std::size_t qubit_count(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw DimensionError("tomography: dimension is not a power of two");
  return n;
}

std::size_t setting_index(const TomoSetting& s) {
  std::size_t idx = 0;
  for (auto r : s) idx = 3 * idx + static_cast<std::size_t>(r);
  return idx;
}

}  // namespace

TomoRotation parse_tomo_rotation(std::string_view text) {
  if (text == "I") return TomoRotation::kI;
  if (text == "X/2") return TomoRotation::kX2;
  if (text == "Y/2") return TomoRotation::kY2;
  throw InvalidArgument("unknown tomography rotation: " + std::string(text));
}

std::string to_string(TomoRotation r) {
  switch (r) {
    case TomoRotation::kI: return "I";
    case TomoRotation::kX2: return "X/2";
    case TomoRotation::kY2: return "Y/2";
  }
  return "?";
}

Eigen::Matrix2cd rotation_matrix(TomoRotation r) {
  const double c = std::cos(std::numbers::pi / 4.0);
  const double s = std::sin(std::numbers::pi / 4.0);
  Eigen::Matrix2cd m;
  switch (r) {
    case TomoRotation::kI: m << 1, 0, 0, 1; break;
    case TomoRotation::kX2: m << c, -kI * s, -kI * s, c; break;
    case TomoRotation::kY2: m << c, -s, s, c; break;
  }
  return m;
}

std::vector<TomoSetting> all_settings(std::size_t n_qubits) {
  if (n_qubits == 0) throw InvalidArgument("all_settings: no qubits");
  std::size_t total = 1;
  for (std::size_t q = 0; q < n_qubits; ++q) total *= 3;
  std::vector<TomoSetting> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    TomoSetting s(n_qubits);
    std::size_t rest = i;
    for (std::size_t q = n_qubits; q-- > 0;) {
      s[q] = static_cast<TomoRotation>(rest % 3);
      rest /= 3;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string outcome_label(std::size_t index, std::size_t n_qubits) {
  std::string s(n_qubits, 'g');
  for (std::size_t q = 0; q < n_qubits; ++q) {
    if ((index >> (n_qubits - 1 - q)) & 1U) s[q] = 'e';
  }
  return s;
}

RealVector born_probabilities(const DensityMatrix& rho, const TomoSetting& setting) {
  const std::size_t n = qubit_count(rho.dimension());
  if (setting.size() != n) throw InvalidArgument("tomography setting does not match the number of qubits");
  const Matrix u = setting_unitary(setting);
  const Matrix r = u * rho.matrix() * u.adjoint();
  RealVector p = r.diagonal().real().cwiseMax(0.0);
  return p / p.sum();
}

MeasurementRecord simulate_measurement(const DensityMatrix& rho, const TomoSetting& setting,
                                       const VisibilityMatrix& vis, const MeasurementOptions& options) {
  const std::size_t n = qubit_count(rho.dimension());
  if (vis.size() != n) throw InvalidArgument("visibility count does not match the number of qubits");
  if (!options.exact && options.shots < 1) throw InvalidArgument("shots must be >= 1");
  const RealVector observed = apply_confusion(born_probabilities(rho, setting), vis);

  MeasurementRecord rec;
  rec.setting = setting;
  if (options.exact) {
    rec.measured_probs = observed;
  } else {
    rec.shots = options.shots;
    std::mt19937_64 rng(derive_seed(options.seed, setting_index(setting)));
    std::discrete_distribution<std::size_t> dist(observed.data(), observed.data() + observed.size());
    std::vector<long> hits(static_cast<std::size_t>(observed.size()), 0);
    for (long s = 0; s < options.shots; ++s) ++hits[dist(rng)];
    for (std::size_t i = 0; i < hits.size(); ++i) rec.counts[outcome_label(i, n)] = hits[i];
  }
  correct_record(rec, vis);
  return rec;
}

void correct_record(MeasurementRecord& record, const VisibilityMatrix& vis) {
  const std::size_t n = record.setting.size();
  const std::size_t dim = std::size_t{1} << n;
  if (record.shots > 0) {
    for (const auto& [key, c] : record.counts) {
      if (key.size() != n || key.find_first_not_of("ge") != std::string::npos) {
        throw InvalidArgument("invalid outcome label in measurement record: " + key);
      }
    }
    long total = 0;
    record.measured_probs = RealVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
      const auto it = record.counts.find(outcome_label(i, n));
      const long c = it == record.counts.end() ? 0 : it->second;
      if (c < 0) throw InvalidArgument("negative count in measurement record");
      record.measured_probs(static_cast<Eigen::Index>(i)) = static_cast<double>(c);
      total += c;
    }
    if (total != record.shots) throw InvalidArgument("measurement counts do not sum to shots");
    record.measured_probs /= static_cast<double>(record.shots);
  } else if (record.measured_probs.size() != static_cast<Eigen::Index>(dim)) {
    throw InvalidArgument("exact measurement record has no probabilities");
  }
  const auto corrected = correct_readout(record.measured_probs, vis);
  record.corrected_probs = corrected.probs;
  record.pre_clip_probs = corrected.pre_clip;
}

DensityMatrix reconstruct_state(const std::vector<MeasurementRecord>& records, const std::vector<std::string>& labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("reconstruct_state: no qubit labels");
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t n_pauli = dim * dim;

  std::set<std::size_t> seen;
  for (const auto& r : records) {
    if (r.setting.size() != n) throw InvalidArgument("reconstruct_state: setting size does not match labels");
    if (r.corrected_probs.size() != static_cast<Eigen::Index>(dim)) {
      throw InvalidArgument("reconstruct_state: record has no corrected probabilities");
    }
    seen.insert(setting_index(r.setting));
  }
  if (seen.size() != all_settings(n).size()) throw InvalidArgument("reconstruct_state: missing tomography settings");

  std::vector<Matrix> paulis;
  paulis.reserve(n_pauli);
  for (std::size_t k = 0; k < n_pauli; ++k) paulis.push_back(pauli_string(k, n));

  const auto rows = static_cast<Eigen::Index>(records.size() * dim);
  Eigen::MatrixXd a(rows, static_cast<Eigen::Index>(n_pauli));
  RealVector b(rows);
  Eigen::Index row = 0;
  for (const auto& r : records) {
    const Matrix u = setting_unitary(r.setting);
    for (std::size_t k = 0; k < n_pauli; ++k) {
      const Matrix rotated = u * paulis[k] * u.adjoint();
      for (std::size_t o = 0; o < dim; ++o) {
        a(row + static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(k)) =
            rotated(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(o)).real() / static_cast<double>(dim);
      }
    }
    b.segment(row, static_cast<Eigen::Index>(dim)) = r.corrected_probs;
    row += static_cast<Eigen::Index>(dim);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() != static_cast<Eigen::Index>(n_pauli)) throw NumericError("reconstruct_state: rank-deficient design");
  const RealVector coeff = qr.solve(b);

  Matrix est = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < n_pauli; ++k) est += coeff(static_cast<Eigen::Index>(k)) * paulis[k];
  est /= static_cast<double>(dim);
  return nearest_physical_state(ComplexOperator(CompositeSpace::qubits(labels), est));
}

DensityMatrix state_tomography(const DensityMatrix& rho, const VisibilityMatrix& vis,
                               const MeasurementOptions& options) {
  std::vector<MeasurementRecord> recs;
  for (const auto& s : all_settings(rho.space().size())) recs.push_back(simulate_measurement(rho, s, vis, options));
  return reconstruct_state(recs, rho.space().labels());
}

nlohmann::json records_to_json(const std::vector<MeasurementRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j;
    std::vector<std::string> setting;
    for (auto s : r.setting) setting.push_back(to_string(s));
    j["setting"] = setting;
    j["shots"] = r.shots;
    j["counts"] = r.counts;
    arr.push_back(j);
  }
  return {{"records", arr}};
}

std::vector<MeasurementRecord> records_from_json(const nlohmann::json& j, const VisibilityMatrix& vis) {
  if (!j.contains("records") || !j["records"].is_array()) throw InvalidArgument("tomography JSON: missing records");
  std::vector<MeasurementRecord> out;
  for (const auto& item : j["records"]) {
    MeasurementRecord r;
    for (const auto& s : item.at("setting")) r.setting.push_back(parse_tomo_rotation(s.get<std::string>()));
    r.shots = item.at("shots").get<long>();
    if (r.shots < 1) throw InvalidArgument("tomography JSON: shots must be >= 1");
    r.counts = item.at("counts").get<std::map<std::string, long>>();
    correct_record(r, vis);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qnet
