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

#include "qnet/runner/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "qnet/channels/bell.hpp"
#include "qnet/channels/error_channels.hpp"
#include "qnet/core/ops.hpp"
#include "qnet/core/random.hpp"
#include "qnet/core/serialization.hpp"
#include "qnet/protocols/analytic.hpp"
#include "qnet/protocols/discrepancy.hpp"
#include "qnet/protocols/pipeline.hpp"
#include "qnet/protocols/protection.hpp"
#include "qnet/protocols/purification.hpp"
#include "qnet/tomography/process_tomography.hpp"
#include "qnet/tomography/state_tomography.hpp"

#ifndef QNET_VERSION
#define QNET_VERSION "unknown"
#endif

namespace qnet {

namespace {

using Row = std::vector<double>;
using RowFn = std::function<std::vector<Row>(double)>;

const std::vector<std::string> kPairLabels = {"Q2A", "Q2B"};

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string csv(const std::vector<std::string>& header, const std::vector<Row>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_number(r[i]);
    os << "\n";
  }
  return os.str();
}

// Output files are assembled in memory and written only after every
// computation has succeeded.
class OutputSet {
 public:
  void add(const std::string& name, std::string content) { files_.emplace_back(name, std::move(content)); }
  void add_json(const std::string& name, const nlohmann::json& j) { add(name, j.dump(2) + "\n"); }

  std::vector<ManifestFile> write(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    std::vector<ManifestFile> out;
    for (const auto& [name, content] : files_) {
      const auto path = dir / name;
      std::ofstream f(path, std::ios::binary);
      if (!f) throw Error("cannot write " + path.string());
      f << content;
      f.close();
      if (!f) throw Error("write failed: " + path.string());
      out.push_back({name, sha256_hex(content), content.size()});
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::uint64_t point_seed(std::uint64_t seed, double value) { return derive_seed(seed, std::bit_cast<std::uint64_t>(value)); }

// Evaluates fn at every value on up to `threads` workers; rows keep the order of values.
std::vector<Row> compute_rows(const std::vector<double>& values, int threads, const RowFn& fn) {
  std::vector<std::vector<Row>> per_point(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  const auto workers = static_cast<std::size_t>(std::clamp<int>(threads, 1, static_cast<int>(values.size())));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < values.size(); i += workers) {
      try {
        per_point[i] = fn(values[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Row> rows;
  for (auto& p : per_point) rows.insert(rows.end(), p.begin(), p.end());
  return rows;
}

BellOptions bell_options(const ExperimentConfig& c) {
  BellOptions b;
  b.basis = c.basis;
  b.integrator = c.integrator;
  return b;
}

std::vector<double> range(double start, double step, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(start + step * i);
  return v;
}

struct PointExperiment {
  std::string axis;
  std::vector<double> defaults;
  std::vector<std::string> columns;
  std::function<RowFn(const ExperimentConfig&)> make;
};

ProtectionParams protection_params(const ExperimentConfig& c) {
  ProtectionParams p;
  p.total_time_ns = c.protection.total_ns;
  p.sample_every_ns = c.protection.sample_every_ns;
  p.T1_A_ns = c.device.q2a.T1_ns();
  p.T1_B_ns = c.device.q2b.T1_ns();
  p.gate_depolarizing = c.protection.gate_depolarizing;
  p.threads = c.threads;
  return p;
}

struct CalibratedNoise {
  DensityMatrix rho0;
  QuasiStaticNoise noise;
  ProtectionParams params;
};

CalibratedNoise calibrate_protection(const ExperimentConfig& c) {
  BellOptions b = bell_options(c);
  const DensityMatrix rho0 = generate_bell_via_cable(c.protection.t_d_ns, c.device, b);
  QuasiStaticNoise noise;
  noise.n_trajectories = c.protection.n_trajectories;
  noise.seed = c.seed;
  const ProtectionParams params = protection_params(c);
  noise.sigma = calibrate_sigma(rho0, c.protection.target_free_fidelity, params.total_time_ns, noise, params);
  return {rho0, noise, params};
}

DensityMatrix tomo_state(const ExperimentConfig& c) {
  return one_sided_bell_error(ChannelKind::kAmplitudeDamping, c.tomography.damping_p)
      .relabeled(CompositeSpace::qubits(kPairLabels));
}

const std::map<std::string, PointExperiment>& point_experiments() {
  static const std::map<std::string, PointExperiment> table = {
      {"bell-vs-delay",
       {"t_d_ns",
        {10, 20, 50, 100, 150, 200, 250, 300, 350, 400},
        {"t_d_ns", "fidelity", "gg_pop", "offdiag_mag", "damping_fraction"},
        [](const ExperimentConfig& c) -> RowFn {
          return [c](double td) {
            const auto rho = generate_bell_via_cable(td, c.device, bell_options(c));
            const auto split = infidelity_split(rho.matrix(), BellLabel::kPsiMinus);
            return std::vector<Row>{{td, 1.0 - split.infidelity, rho.population(0), std::abs(rho(1, 2)),
                                     split.damping_fraction}};
          };
        }}},
      {"purify-sweep",
       {"t_d_ns",
        {10, 20, 50, 100, 150, 200, 250, 300, 350, 400},
        {"t_d_ns", "fidelity_stored", "fidelity_fresh", "fidelity_post", "success", "fractional_gain"},
        [](const ExperimentConfig& c) -> RowFn {
          return [c](double td) {
            PipelineOptions o;
            o.storage_decay = c.storage_decay;
            o.bell = bell_options(c);
            const auto p = purification_pipeline(td, c.device, o);
            return std::vector<Row>{
                {td, p.fidelity_first, p.fidelity_second, p.fidelity_post, p.success, p.fractional_gain}};
          };
        }}},
      {"protocol-compare",
       {"t_d_ns",
        {10, 50, 100, 200, 300, 400},
        {"t_d_ns", "storage_decay", "fidelity_pre", "bit", "bit_success", "bit_ee", "bit_ee_success", "phase",
         "phase_success", "double_selection", "double_selection_success"},
        [](const ExperimentConfig& c) -> RowFn {
          return [c](double td) {
            std::vector<Row> rows;
            for (bool decay : {false, true}) {
              PipelineOptions o;
              o.storage_decay = decay;
              o.bell = bell_options(c);
              const auto r = compare_protocols(td, c.device, o);
              rows.push_back({td, decay ? 1.0 : 0.0, r.fidelity_pre, r.bit_fidelity, r.bit_success,
                              r.bit_ee_fidelity, r.bit_ee_success, r.phase_fidelity, r.phase_success,
                              r.double_fidelity, r.double_success});
            }
            return rows;
          };
        }}},
      {"purify-closed-form",
       {"p",
        range(0.0, 0.05, 20),
        {"p", "fidelity_in", "closed_form", "circuit", "abs_diff", "success"},
        [](const ExperimentConfig&) -> RowFn {
          return [](double p) {
            const auto rho = one_sided_bell_error(ChannelKind::kBitFlip, p);
            const double f_in = bell_weights(rho.matrix()).psi_minus;
            const auto o = purify(rho, rho, Scheme::kBit, Selection::kBothConsistent);
            const double closed = analytic_purified_fidelity(f_in);
            return std::vector<Row>{{p, f_in, closed, o.fidelity, std::abs(closed - o.fidelity), o.success_prob}};
          };
        }}},
      {"protect",
       {"omega_mhz",
        {5.0},
        {"omega_mhz", "rd_final_fidelity", "rd_final_stderr", "rd_t2_us"},
        [](const ExperimentConfig& c) -> RowFn {
          auto cal = std::make_shared<CalibratedNoise>(calibrate_protection(c));
          return [cal](double omega_mhz) {
            const auto s = protect_rabi(cal->rho0, mhz_to_angular(omega_mhz), cal->noise, cal->params);
            return std::vector<Row>{
                {omega_mhz, s.fidelity_mean.back(), s.fidelity_stderr.back(), effective_t2(s) * 1e-3}};
          };
        }}},
      {"ringdown",
       {"delay_ns",
        range(0.0, 100.0, 11),
        {"delay_ns", "pe"},
        [](const ExperimentConfig& c) -> RowFn {
          const double swap = c.ringdown_swap_ns > 0.0 ? c.ringdown_swap_ns : full_swap_time(c.device.g_swap);
          return [c, swap](double delay) {
            const std::vector<double> d{delay};
            const auto s = cable_ringdown_series(swap, d, c.device, c.integrator);
            return std::vector<Row>{{delay, s.pe.front()}};
          };
        }}},
      {"tomo-demo",
       {"shots",
        {8000},
        {"shots", "mean_fidelity", "std_fidelity", "mean_trace_distance"},
        [](const ExperimentConfig& c) -> RowFn {
          return [c](double shots) {
            const auto rho = tomo_state(c);
            const auto vis = device_visibilities(kPairLabels);
            std::vector<double> f;
            double td = 0.0;
            const std::uint64_t base = point_seed(c.seed, shots);
            for (int r = 0; r < c.tomography.repeats; ++r) {
              const MeasurementOptions m{static_cast<long>(shots), derive_seed(base, static_cast<std::uint64_t>(r)),
                                         false};
              const auto est = state_tomography(rho, vis, m);
              f.push_back(uhlmann_fidelity(est, rho));
              td += trace_distance(est, rho);
            }
            const double n = static_cast<double>(f.size());
            double mean = 0.0;
            for (double x : f) mean += x;
            mean /= n;
            double var = 0.0;
            for (double x : f) var += (x - mean) * (x - mean);
            const double sd = f.size() > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
            return std::vector<Row>{{shots, mean, sd, td / n}};
          };
        }}},
  };
  return table;
}

std::vector<double> axis_values(const ExperimentConfig& c, const PointExperiment& e) {
  const auto it = c.sweep.find(e.axis);
  return it == c.sweep.end() ? e.defaults : it->second;
}

std::size_t column(const PointExperiment& e, const std::string& name) {
  return static_cast<std::size_t>(std::find(e.columns.begin(), e.columns.end(), name) - e.columns.begin());
}

// Experiment-specific files and scalars beyond the per-point table.
void add_extras(const ExperimentConfig& c, const PointExperiment& e, const std::vector<Row>& rows, OutputSet& out,
                nlohmann::json& summary) {
  const std::string& name = c.experiment;
  if (name == "bell-vs-delay") {
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i][1] < rows[i - 1][1];
    summary["fidelity_first"] = rows.front()[1];
    summary["fidelity_last"] = rows.back()[1];
    summary["damping_fraction_last"] = rows.back()[column(e, "damping_fraction")];
    summary["strictly_decreasing"] = decreasing;
  } else if (name == "purify-sweep") {
    double best = 0.0;
    double best_gain = 0.0;
    for (const auto& r : rows) {
      best = std::max(best, r[3]);
      best_gain = std::max(best_gain, r[5]);
    }
    summary["best_post_fidelity"] = best;
    summary["largest_fractional_gain"] = best_gain;
    summary["storage_decay"] = c.storage_decay;
  } else if (name == "purify-closed-form") {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r[4]);
    summary["max_abs_diff"] = worst;
  } else if (name == "ringdown") {
    std::vector<double> t;
    std::vector<double> y;
    for (const auto& r : rows) {
      t.push_back(r[0]);
      y.push_back(r[1]);
    }
    if (rows.size() >= 2) {
      const auto fit = fit_exponential(t, y);
      summary["fitted_T1r_ns"] = 1.0 / fit.rate;
      summary["fitted_amplitude"] = fit.amplitude;
    }
    summary["configured_T1r_ns"] = c.device.cable.T1r_ns;
  } else if (name == "protect") {
    const auto cal = calibrate_protection(c);
    const double omega = mhz_to_angular(rows.front()[0]);
    const auto free = protect_free(cal.rho0, cal.noise, cal.params);
    const auto dd = protect_dd(cal.rho0, cal.noise, cal.params);
    const auto rd = protect_rabi(cal.rho0, omega, cal.noise, cal.params);
    for (const auto& [file, series] : {std::pair{"protect_free.csv", &free}, std::pair{"protect_dd.csv", &dd},
                                        std::pair{"protect_rd.csv", &rd}}) {
      std::ostringstream os;
      write_protection_csv(os, *series);
      out.add(file, os.str());
    }
    summary["initial_fidelity"] = free.fidelity_mean.front();
    summary["sigma_rad_per_ns"] = cal.noise.sigma;
    summary["free_final_fidelity"] = free.fidelity_mean.back();
    summary["dd_final_fidelity"] = dd.fidelity_mean.back();
    summary["rd_final_fidelity"] = rd.fidelity_mean.back();
    summary["rd_omega_mhz"] = rows.front()[0];
    summary["free_t2_us"] = effective_t2(free) * 1e-3;
    summary["dd_t2_us"] = effective_t2(dd) * 1e-3;
    summary["rd_t2_us"] = effective_t2(rd) * 1e-3;
  } else if (name == "tomo-demo") {
    const auto rho = tomo_state(c);
    const auto vis = device_visibilities(kPairLabels);
    const MeasurementOptions m{static_cast<long>(rows.front()[0]), point_seed(c.seed, rows.front()[0]), false};
    std::vector<MeasurementRecord> records;
    for (const auto& s : all_settings(2)) records.push_back(simulate_measurement(rho, s, vis, m));
    const auto est = reconstruct_state(records, kPairLabels);
    out.add_json("tomo_records.json", records_to_json(records));
    out.add_json("tomo_true_state.json", to_json(rho));
    out.add_json("tomo_reconstructed_state.json", to_json(est));

    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    const auto ideal = chi_of_unitary(cz);
    const auto damp = make_channel(ChannelKind::kAmplitudeDamping, c.tomography.process_damping);
    ProcessTomographyOptions po;
    po.vis = vis;
    po.measurement = {static_cast<long>(rows.front()[0]), derive_seed(c.seed, 0xC2), false};
    const std::vector<std::string> target_b{"Q2B"};
    const auto chi = process_tomography(
        [&](const DensityMatrix& r) { return apply_channel(apply_unitary(r, cz, kPairLabels), damp, target_b); },
        kPairLabels, po);
    out.add_json("cz_chi_ideal.json", to_json(ideal));
    out.add_json("cz_chi_measured.json", to_json(chi));
    summary["reconstruction_fidelity"] = uhlmann_fidelity(est, rho);
    summary["cz_process_fidelity"] = process_fidelity(ideal, chi);
    summary["cz_process_damping"] = c.tomography.process_damping;
  }
}

void run_vacuum_rabi(const ExperimentConfig& c, OutputSet& out, nlohmann::json& summary) {
  VacuumRabiParams p;
  p.g = c.device.g_swap;
  p.T1_eff_ns = us_to_ns(c.vacuum_rabi.T1_eff_us);
  p.Tphi_ns = us_to_ns(c.vacuum_rabi.Tphi_us);
  p.T1r_ns = c.device.cable.T1r_ns;
  p.t_max_ns = c.vacuum_rabi.t_max_ns;
  p.dt_out_ns = c.vacuum_rabi.dt_out_ns;
  p.n_modes = c.device.cable.n_modes;
  p.basis = c.basis;
  p.integrator = c.integrator;
  const auto s = simulate_vacuum_rabi(p);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < s.t_ns.size(); ++i) rows.push_back({s.t_ns[i], s.pe[i]});
  out.add("vacuum_rabi.csv", csv({"t_ns", "pe_Q2A"}, rows));
  const double w = oscillation_frequency(s);
  summary["g_mhz"] = angular_to_mhz(p.g);
  summary["oscillation_frequency_mhz"] = angular_to_mhz(w);
  summary["frequency_over_2g"] = w / (2.0 * p.g);
  summary["full_swap_time_ns"] = std::numbers::pi / w;
  summary["first_minimum_ns"] = first_minimum_time(s);
}

DiscrepancyReport discrepancy_for_run(OutputSet& out) {
  const auto d = build_discrepancy_report();
  out.add("discrepancy.md", d.to_markdown());
  out.add_json("discrepancy.json", d.to_json());
  return d;
}

RunManifest finish(const ExperimentConfig& c, OutputSet& out, const nlohmann::json& summary,
                   const std::filesystem::path& dir, std::chrono::steady_clock::time_point start) {
  out.add_json("summary.json", summary);
  discrepancy_for_run(out);
  RunManifest m;
  m.experiment = c.experiment;
  m.config_hash = c.hash();
  m.library_version = QNET_VERSION;
  m.seed = c.seed;
  m.files = out.write(dir);
  m.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_manifest(m, dir / "manifest.json");
  return m;
}

class ToleranceScope {
 public:
  explicit ToleranceScope(const std::optional<Tolerances>& t) : saved_(Tolerances::defaults()), active_(t.has_value()) {
    if (active_) set_default_tolerances(*t);
  }
  ~ToleranceScope() {
    if (active_) set_default_tolerances(saved_);
  }
  ToleranceScope(const ToleranceScope&) = delete;
  ToleranceScope& operator=(const ToleranceScope&) = delete;

 private:
  Tolerances saved_;
  bool active_;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

std::string experiment_axis(const std::string& experiment) {
  const auto& t = point_experiments();
  const auto it = t.find(experiment);
  return it == t.end() ? std::string{} : it->second.axis;
}

RunManifest run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  ToleranceScope tol(config.tolerances);
  OutputSet out;
  nlohmann::json summary;
  summary["experiment"] = config.experiment;
  summary["seed"] = config.seed;
  if (config.experiment == "vacuum-rabi") {
    run_vacuum_rabi(config, out, summary);
  } else {
    const auto& e = point_experiments().at(config.experiment);
    const auto rows = compute_rows(axis_values(config, e), config.threads, e.make(config));
    out.add(config.experiment + ".csv", csv(e.columns, rows));
    add_extras(config, e, rows, out, summary);
  }
  return finish(config, out, summary, out_dir, start);
}

RunManifest run_sweep(const ExperimentConfig& config, const std::string& axis, const std::filesystem::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const auto& table = point_experiments();
  const auto it = table.find(config.experiment);
  if (it == table.end() || it->second.axis != axis) {
    throw ConfigError("experiment " + config.experiment + " has no sweep axis '" + axis + "'");
  }
  if (!config.sweep.contains(axis)) throw ConfigError("axis '" + axis + "' is not declared in [sweep]");
  ToleranceScope tol(config.tolerances);
  OutputSet out;
  const auto rows = compute_rows(config.sweep.at(axis), config.threads, it->second.make(config));
  out.add("sweep_" + axis + ".csv", csv(it->second.columns, rows));
  nlohmann::json summary;
  summary["experiment"] = config.experiment;
  summary["seed"] = config.seed;
  summary["axis"] = axis;
  summary["points"] = config.sweep.at(axis).size();
  return finish(config, out, summary, out_dir, start);
}

void report(const std::filesystem::path& target, std::ostream& out) {
  const auto manifest_path = std::filesystem::is_directory(target) ? target / "manifest.json" : target;
  const auto dir = manifest_path.parent_path();
  const auto m = read_manifest(manifest_path);
  if (m.files.empty()) throw Error("manifest lists no output files");
  const auto bad = verify_manifest(m, dir);
  if (!bad.empty()) {
    std::string list;
    for (const auto& b : bad) list += " " + b;
    throw Error("checksum mismatch or missing file:" + list);
  }

  out << "experiment: " << m.experiment << "\n";
  out << "seed: " << m.seed << "\n";
  out << "config sha256: " << m.config_hash << "\n";
  out << "library version: " << m.library_version << "\n";
  out << "files verified: " << m.files.size() << "\n\n";

  std::ifstream sf(dir / "summary.json");
  if (sf) {
    nlohmann::json s;
    sf >> s;
    out << "key results\n";
    for (const auto& [k, v] : s.items()) out << "  " << k << ": " << v.dump() << "\n";
    out << "\n";
  }

  if (m.experiment == "purify-sweep") {
    std::ifstream cf(dir / "purify-sweep.csv");
    std::string line;
    if (cf && std::getline(cf, line)) {
      out << std::left << std::setw(10) << "t_d_ns" << std::setw(12) << "F_pre" << std::setw(12) << "F_post"
          << "success\n";
      while (std::getline(cf, line)) {
        const auto f = split_csv_line(line);
        if (f.size() < 5) continue;
        out << std::left << std::setw(10) << f[0] << std::setw(12) << f[2].substr(0, 8) << std::setw(12)
            << f[3].substr(0, 8) << f[4].substr(0, 8) << "\n";
      }
      out << "\n";
    }
  }

  std::ifstream df(dir / "discrepancy.md");
  if (df) out << df.rdbuf() << "\n";
}

}  // namespace qnet
