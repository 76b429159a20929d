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

#include <fstream>
#include <iostream>

#include "qnet/protocols/discrepancy.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: qnet_discrepancy REPORT.md REPORT.json\n";
    return 2;
  }
  const auto report = qnet::build_discrepancy_report();
  std::ofstream md(argv[1]);
  std::ofstream js(argv[2]);
  if (!md || !js) {
    std::cerr << "cannot open output files\n";
    return 1;
  }
  md << report.to_markdown();
  js << report.to_json().dump(2) << "\n";
  return 0;
}
