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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qnet/core/errors.hpp"
#include "qnet/runner/config.hpp"
#include "qnet/runner/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "Experiment config file (INI)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "Output directory (overrides run.output_dir)");
  cmd->add_option("--seed", f.seed, "Seed (overrides run.seed)");
  cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
}

qnet::ExperimentConfig load(const CommonFlags& f) {
  auto c = qnet::load_config(f.config);
  if (f.seed) qnet::set_entry(c, "run.seed", std::to_string(*f.seed));
  if (f.threads) qnet::set_entry(c, "run.threads", std::to_string(*f.threads));
  return c;
}

std::filesystem::path out_dir(const CommonFlags& f, const qnet::ExperimentConfig& c) {
  if (!f.out.empty()) return f.out;
  if (!c.output_dir.empty()) return c.output_dir;
  return "out";
}

void print_manifest(const qnet::RunManifest& m, const std::filesystem::path& dir) {
  std::cout << m.experiment << ": wrote " << m.files.size() << " files to " << dir.string() << " ("
            << m.elapsed_s << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-node superconducting network simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run = app.add_subcommand("run", "Run the configured experiment");
  add_common(run, run_flags);

  CommonFlags sweep_flags;
  std::string axis;
  auto* sweep = app.add_subcommand("sweep", "Sweep one axis of the configured experiment");
  add_common(sweep, sweep_flags);
  sweep->add_option("--axis", axis, "Axis name declared in [sweep]")->required();

  std::string report_target;
  auto* rep = app.add_subcommand("report", "Summarize a finished run");
  rep->add_option("--out,target", report_target, "Output directory or manifest.json")->required();

  std::string validate_path;
  auto* val = app.add_subcommand("validate-config", "Check a config file");
  val->add_option("--config,config", validate_path, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run) {
      const auto c = load(run_flags);
      const auto dir = out_dir(run_flags, c);
      print_manifest(qnet::run_experiment(c, dir), dir);
    } else if (*sweep) {
      const auto c = load(sweep_flags);
      const auto dir = out_dir(sweep_flags, c);
      print_manifest(qnet::run_sweep(c, axis, dir), dir);
    } else if (*rep) {
      qnet::report(report_target, std::cout);
    } else if (*val) {
      const auto c = qnet::load_config(validate_path);
      std::cout << "config ok: experiment " << c.experiment << ", sha256 " << c.hash() << "\n";
    }
  } catch (const qnet::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qnet::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const qnet::NonPhysicalStateError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const qnet::DegenerateInputError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
