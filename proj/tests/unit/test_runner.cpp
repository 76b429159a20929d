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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qnet/runner/config.hpp"
#include "qnet/runner/experiments.hpp"
#include "qnet/runner/manifest.hpp"

using namespace qnet;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qnet_runner_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const char* kClosedForm =
    "[run]\nexperiment = purify-closed-form\nseed = 4\n\n[sweep]\np = 0, 0.25, 0.5, 0.75\n";

}  // namespace

TEST(Config, ParsesUnitsAndSections) {
  const auto c = parse_config(
      "[run]\nexperiment = bell-vs-delay\nseed = 9\nthreads = 2\n[device]\ng_mhz = 5\nq1a_t1_us = 20\n"
      "[sweep]\nt_d_ns = 10, 20\n");
  EXPECT_EQ(c.experiment, "bell-vs-delay");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.threads, 2);
  EXPECT_NEAR(c.device.g_swap, 2 * 3.14159265358979 * 5e-3, 1e-12);
  EXPECT_DOUBLE_EQ(c.device.q1a.T1_us, 20.0);
  EXPECT_EQ(c.sweep.at("t_d_ns"), (std::vector<double>{10, 20}));
  EXPECT_EQ(c.hash().size(), 64u);
}

TEST(Config, ErrorsAreHard) {
  const std::string base = "[run]\nexperiment = bell-vs-delay\nseed = 1\n";
  EXPECT_THROW(parse_config(base + "[device]\ng_mhzz = 4\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "[devices]\ng_mhz = 4\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "[sweep]\nt_d_ns =\n"), ConfigError);
  EXPECT_THROW(parse_config("[run]\nexperiment = bell-vs-delay\n"), ConfigError);
  EXPECT_THROW(parse_config("[run]\nexperiment = warp-drive\nseed = 1\n"), ConfigError);
  EXPECT_THROW(parse_config("seed = 1\n[run]\nexperiment = ringdown\n"), ConfigError);
  EXPECT_THROW(parse_config(base + "[device]\ng_mhz = fast\n"), ConfigError);
}

TEST(Config, SeedOverrideChangesHash) {
  auto c = parse_config(kClosedForm);
  const auto h = c.hash();
  set_entry(c, "run.seed", "5");
  EXPECT_EQ(c.seed, 5u);
  EXPECT_NE(c.hash(), h);
  EXPECT_EQ(registered_experiments().size(), 8u);
}

TEST(Config, EmptySweepWritesNothing) {
  const auto dir = fresh_dir("empty");
  EXPECT_THROW(parse_config("[run]\nexperiment = purify-closed-form\nseed = 1\n[sweep]\np = \n"), ConfigError);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(Manifest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Runner, RunIsDeterministicAndChecksummed) {
  const auto c = parse_config(kClosedForm);
  const auto a = fresh_dir("det_a");
  const auto b = fresh_dir("det_b");
  const auto ma = run_experiment(c, a);
  const auto mb = run_experiment(c, b);
  ASSERT_EQ(ma.files.size(), mb.files.size());
  for (std::size_t i = 0; i < ma.files.size(); ++i) {
    EXPECT_EQ(ma.files[i].path, mb.files[i].path);
    EXPECT_EQ(slurp(a / ma.files[i].path), slurp(b / mb.files[i].path)) << ma.files[i].path;
    EXPECT_EQ(ma.files[i].sha256, sha256_file(a / ma.files[i].path));
  }
  EXPECT_TRUE(verify_manifest(read_manifest(a / "manifest.json"), a).empty());
  const auto rows = lines(slurp(a / "purify-closed-form.csv"));
  EXPECT_EQ(rows.front(), "p,fidelity_in,closed_form,circuit,abs_diff,success");
  EXPECT_EQ(rows.size(), 5u);
}

TEST(Runner, ReversedSweepReversesRows) {
  auto c = parse_config(kClosedForm);
  const auto a = fresh_dir("rev_a");
  run_sweep(c, "p", a);
  set_entry(c, "sweep.p", "0.75, 0.5, 0.25, 0");
  const auto b = fresh_dir("rev_b");
  run_sweep(c, "p", b);
  auto ra = lines(slurp(a / "sweep_p.csv"));
  auto rb = lines(slurp(b / "sweep_p.csv"));
  ASSERT_EQ(ra.size(), rb.size());
  EXPECT_EQ(ra.front(), rb.front());
  std::reverse(rb.begin() + 1, rb.end());
  EXPECT_EQ(ra, rb);
  EXPECT_THROW(run_sweep(c, "t_d_ns", fresh_dir("rev_c")), ConfigError);
}

TEST(Runner, ReportSummarizesAndDetectsTampering) {
  const auto c = parse_config(
      "[run]\nexperiment = purify-sweep\nseed = 1\n[sweep]\nt_d_ns = 20, 100\n");
  const auto dir = fresh_dir("report");
  run_experiment(c, dir);
  std::ostringstream out;
  report(dir, out);
  const auto text = out.str();
  EXPECT_NE(text.find("F_pre"), std::string::npos);
  EXPECT_NE(text.find("F_post"), std::string::npos);
  { std::ofstream(dir / "purify-sweep.csv", std::ios::app) << "tampered\n"; }
  std::ostringstream again;
  EXPECT_THROW(report(dir, again), Error);
}

TEST(Runner, EmptyManifestIsAnError) {
  const auto dir = fresh_dir("empty_manifest");
  fs::create_directories(dir);
  RunManifest m;
  m.experiment = "ringdown";
  write_manifest(m, dir / "manifest.json");
  std::ostringstream out;
  EXPECT_THROW(report(dir, out), Error);
  EXPECT_THROW(report(dir / "missing", out), Error);
}
