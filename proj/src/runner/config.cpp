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

#include "qnet/runner/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "qnet/runner/manifest.hpp"

namespace qnet {

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"run", {"experiment", "seed", "threads", "output_dir"}},
      {"device",
       {"g_mhz", "t1r_ns", "n_modes", "fsr_mhz", "t1_coupler_on_us", "tphi_coupler_on_us", "iswap_ns",
        "pi_pulse_ns", "q1a_t1_us", "q1a_tphi_us", "q1b_t1_us", "q1b_tphi_us", "q2a_t1_us", "q2a_tphi_us",
        "q2b_t1_us", "q2b_tphi_us"}},
      {"integrator", {"dt_ns", "richardson_check", "basis"}},
      {"sweep", {"t_d_ns", "p", "omega_mhz", "delay_ns", "shots"}},
      {"vacuum_rabi", {"t_max_ns", "dt_out_ns", "t1_eff_us", "tphi_us"}},
      {"ringdown", {"swap_ns"}},
      {"purify", {"storage_decay"}},
      {"protection", {"t_d_ns", "total_ns", "sample_every_ns", "n_trajectories", "target_free_fidelity", "gate_depolarizing"}},
      {"tomography", {"repeats", "damping_p", "process_damping"}},
      {"tolerances",
       {"hermiticity", "trace", "min_eigenvalue", "pure_norm", "completeness", "unitarity", "fidelity_clamp",
        "probability_sum", "chi_trace"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  return out;
}

long long to_integer(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) throw ConfigError(key + ": empty list element");
    out.push_back(to_double(key, item));
  }
  if (out.empty()) throw ConfigError(key + ": sweep list is empty");
  return out;
}

QubitParams* qubit_for(DeviceParams& d, const std::string& prefix) {
  if (prefix == "q1a") return &d.q1a;
  if (prefix == "q1b") return &d.q1b;
  if (prefix == "q2a") return &d.q2a;
  if (prefix == "q2b") return &d.q2b;
  return nullptr;
}

void apply(ExperimentConfig& c, const std::string& full, const std::string& value) {
  const auto dot = full.find('.');
  const std::string section = full.substr(0, dot);
  const std::string key = full.substr(dot + 1);
  if (section == "run") {
    if (key == "experiment") c.experiment = trim(value);
    if (key == "seed") {
      const long long s = to_integer(full, value);
      if (s < 0) throw ConfigError("run.seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    }
    if (key == "threads") c.threads = static_cast<int>(to_integer(full, value));
    if (key == "output_dir") c.output_dir = trim(value);
  } else if (section == "device") {
    auto& d = c.device;
    if (key == "g_mhz") d.g_swap = mhz_to_angular(to_double(full, value));
    if (key == "t1r_ns") d.cable.T1r_ns = to_double(full, value);
    if (key == "n_modes") d.cable.n_modes = static_cast<int>(to_integer(full, value));
    if (key == "fsr_mhz") d.cable.omega_fsr = mhz_to_angular(to_double(full, value));
    if (key == "t1_coupler_on_us") d.T1_coupler_on_us = to_double(full, value);
    if (key == "tphi_coupler_on_us") d.Tphi_coupler_on_us = to_double(full, value);
    if (key == "iswap_ns") d.iswap_ns = to_double(full, value);
    if (key == "pi_pulse_ns") d.pi_pulse_ns = to_double(full, value);
    if (key.size() > 4 && key[0] == 'q') {
      QubitParams* q = qubit_for(d, key.substr(0, 3));
      if (key.ends_with("_t1_us")) q->T1_us = to_double(full, value);
      if (key.ends_with("_tphi_us")) q->Tphi_us = to_double(full, value);
    }
  } else if (section == "integrator") {
    if (key == "dt_ns") c.integrator.dt_ns = to_double(full, value);
    if (key == "richardson_check") c.integrator.richardson_check = to_bool(full, value);
    if (key == "basis") {
      const std::string b = trim(value);
      if (b == "se") {
        c.basis = Basis::kSingleExcitation;
      } else if (b == "full") {
        c.basis = Basis::kFull;
      } else {
        throw ConfigError("integrator.basis must be 'se' or 'full'");
      }
    }
  } else if (section == "sweep") {
    c.sweep[key] = to_list(full, value);
  } else if (section == "vacuum_rabi") {
    if (key == "t_max_ns") c.vacuum_rabi.t_max_ns = to_double(full, value);
    if (key == "dt_out_ns") c.vacuum_rabi.dt_out_ns = to_double(full, value);
    if (key == "t1_eff_us") c.vacuum_rabi.T1_eff_us = to_double(full, value);
    if (key == "tphi_us") c.vacuum_rabi.Tphi_us = to_double(full, value);
  } else if (section == "ringdown") {
    c.ringdown_swap_ns = to_double(full, value);
  } else if (section == "purify") {
    c.storage_decay = to_bool(full, value);
  } else if (section == "protection") {
    auto& p = c.protection;
    if (key == "t_d_ns") p.t_d_ns = to_double(full, value);
    if (key == "total_ns") p.total_ns = to_double(full, value);
    if (key == "sample_every_ns") p.sample_every_ns = to_double(full, value);
    if (key == "n_trajectories") p.n_trajectories = static_cast<int>(to_integer(full, value));
    if (key == "target_free_fidelity") p.target_free_fidelity = to_double(full, value);
    if (key == "gate_depolarizing") p.gate_depolarizing = to_double(full, value);
  } else if (section == "tomography") {
    auto& t = c.tomography;
    if (key == "repeats") t.repeats = static_cast<int>(to_integer(full, value));
    if (key == "damping_p") t.damping_p = to_double(full, value);
    if (key == "process_damping") t.process_damping = to_double(full, value);
  } else if (section == "tolerances") {
    if (!c.tolerances) c.tolerances = Tolerances{};
    auto& t = *c.tolerances;
    const double v = to_double(full, value);
    if (key == "hermiticity") t.hermiticity = v;
    if (key == "trace") t.trace = v;
    if (key == "min_eigenvalue") t.min_eigenvalue = v;
    if (key == "pure_norm") t.pure_norm = v;
    if (key == "completeness") t.completeness = v;
    if (key == "unitarity") t.unitarity = v;
    if (key == "fidelity_clamp") t.fidelity_clamp = v;
    if (key == "probability_sum") t.probability_sum = v;
    if (key == "chi_trace") t.chi_trace = v;
  }
}

void validate(const ExperimentConfig& c) {
  const auto& names = registered_experiments();
  if (c.experiment.empty()) throw ConfigError("run.experiment is required");
  if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
    throw ConfigError("unknown experiment: " + c.experiment);
  }
  if (!c.entries.contains("run.seed")) throw ConfigError("run.seed is required");
  if (c.threads < 1) throw ConfigError("run.threads must be >= 1");
  if (!(c.integrator.dt_ns > 0.0)) throw ConfigError("integrator.dt_ns must be positive");
  if (c.protection.n_trajectories < 1) throw ConfigError("protection.n_trajectories must be >= 1");
  if (!(c.protection.total_ns > 0.0) || !(c.protection.sample_every_ns > 0.0)) {
    throw ConfigError("protection times must be positive");
  }
  if (c.tomography.repeats < 1) throw ConfigError("tomography.repeats must be >= 1");
  if (c.tomography.damping_p < 0.0 || c.tomography.damping_p > 1.0) throw ConfigError("tomography.damping_p outside [0,1]");
  if (c.tomography.process_damping < 0.0 || c.tomography.process_damping > 1.0) {
    throw ConfigError("tomography.process_damping outside [0,1]");
  }
  for (const auto& [axis, values] : c.sweep) {
    for (double v : values) {
      if (axis == "p" && (v < 0.0 || v > 1.0)) throw ConfigError("sweep.p values must lie in [0,1]");
      if (axis != "p" && v < 0.0) throw ConfigError("sweep." + axis + " values must be non-negative");
      if (axis == "shots" && (v < 1.0 || v != static_cast<double>(static_cast<long>(v)))) {
        throw ConfigError("sweep.shots values must be positive integers");
      }
    }
  }
  try {
    c.device.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("device: ") + e.what());
  }
}

ExperimentConfig build(const std::map<std::string, std::string>& entries) {
  ExperimentConfig c;
  c.entries = entries;
  for (const auto& [k, v] : entries) apply(c, k, v);
  validate(c);
  return c;
}

}  // namespace

const std::vector<std::string>& registered_experiments() {
  static const std::vector<std::string> names = {"vacuum-rabi",   "ringdown",         "bell-vs-delay",
                                                 "purify-sweep",  "protocol-compare", "protect",
                                                 "tomo-demo",     "purify-closed-form"};
  return names;
}

std::string ExperimentConfig::canonical_text() const {
  std::string out;
  for (const auto& [k, v] : entries) out += k + "=" + trim(v) + "\n";
  return out;
}

std::string ExperimentConfig::hash() const { return sha256_hex(canonical_text()); }

ExperimentConfig parse_config(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  std::map<std::string, std::string> entries;
  const auto& allowed = allowed_keys();
  for (const auto& [section, body] : tree) {
    const auto it = allowed.find(section);
    if (body.empty() && !body.data().empty()) throw ConfigError("entry outside any section: " + section);
    if (it == allowed.end()) throw ConfigError("unknown section: [" + section + "]");
    for (const auto& [key, node] : body) {
      if (!it->second.contains(key)) throw ConfigError("unknown key: " + section + "." + key);
      entries[section + "." + key] = node.data();
    }
  }
  return build(entries);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void set_entry(ExperimentConfig& config, const std::string& key, const std::string& value) {
  auto entries = config.entries;
  entries[key] = value;
  config = build(entries);
}

}  // namespace qnet
