// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "randmeas/qstate.hpp"

namespace randmeas::cli {

// Everything a single invocation needs.
struct RunConfig {
  std::string command;
  StateSpec state = StateSpec::bell_psi_minus();
  // "full", "all" (every non-empty subset) or a comma list of labels.
  std::string subset = "full";
  std::size_t samples = 0;
  std::size_t shots = 0;
  int design = 0;
  bool half_design = false;
  std::vector<int> orders = {2};
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string test;
  bool structure = false;
  bool bootstrap = false;
  double z = 3.0;
  int bins = 81;
  int order = 0;  // design command

  nlohmann::json to_json() const;
};

// Parses argv-style arguments (without the program name). Throws
// std::invalid_argument with a user-facing message.
RunConfig parse_run_config(const std::vector<std::string>& args);

// Canonical argument list; parse_run_config(render_run_config(c)) == c.
std::vector<std::string> render_run_config(const RunConfig& config);

// Runs the tool. Returns the process exit status: 0 success, 1 input error,
// 3 failed internal oracle cross-check.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace randmeas::cli
