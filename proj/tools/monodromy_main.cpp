// Copyright 2026 The Monodromy Authors
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

// Command-line front end: monodromy {curve, surface, verify-truncation, batch}.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "monodromy/report.hpp"

namespace {

int finish(const monodromy::CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

void add_report_flags(CLI::App* cmd, monodromy::ReportOptions& options) {
  cmd->add_flag("--json", options.json, "Emit a JSON report");
  cmd->add_flag("--cyclotomic", options.cyclotomic, "Include cyclotomic normal forms");
  cmd->add_flag("--trace", options.trace, "Include the per-level recursion trace");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy invariants of plane curves and quasi-ordinary surfaces"};
  app.require_subcommand(1);

  monodromy::ReportOptions options;
  std::string input;
  std::string axis = "x";

  auto* curve = app.add_subcommand("curve", "Degree, Euler characteristic and H(t) of a curve");
  curve->add_option("input", input, "Series like \"y^(3/2)+y^(7/4)\", a JSON object, a file, or -")
      ->required();
  add_report_flags(curve, options);

  auto* surface = app.add_subcommand("surface", "d, chi, H(t) and V(t) of a quasi-ordinary surface");
  surface->add_option("input", input, "Series like \"x^(1/2)*y^(3/2)\", a JSON object, a file, or -")
      ->required();
  surface->add_option("--axis", axis, "Loop around the x axis (default) or the y axis")
      ->check(CLI::IsMember({"x", "y"}));
  add_report_flags(surface, options);

  monodromy::VerifyOptions verify;
  std::vector<int> point;
  auto* verify_cmd = app.add_subcommand(
      "verify-truncation", "Compare the bigraph oracle with the truncation closed forms");
  verify_cmd->add_option("--m-max", verify.m_max, "Largest m")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n")->check(CLI::Range(1, 64));
  verify_cmd->add_option("--a-max", verify.a_max, "Largest a")->check(CLI::Range(0, 64));
  verify_cmd->add_option("--b-max", verify.b_max, "Largest b")->check(CLI::Range(1, 16));
  verify_cmd->add_option("--point", point, "Single point m n a b")->expected(4)->delimiter(',');

  std::string batch_file;
  unsigned threads = 0;
  auto* batch = app.add_subcommand("batch", "Process a JSON-lines file of series");
  batch->add_option("file", batch_file, "JSON-lines input, or - for stdin")->required();
  batch->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");
  batch->add_flag("--cyclotomic", options.cyclotomic, "Include cyclotomic normal forms");
  batch->add_flag("--trace", options.trace, "Include the per-level recursion trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*curve) return finish(monodromy::run_curve(monodromy::resolve_input(input), options));
  if (*surface) {
    options.axis = axis[0];
    return finish(monodromy::run_surface(monodromy::resolve_input(input), options));
  }
  if (*verify_cmd) {
    if (!point.empty()) verify.point = std::array<int, 4>{point[0], point[1], point[2], point[3]};
    return finish(monodromy::run_verify_truncation(verify));
  }
  if (batch_file == "-") return finish(monodromy::run_batch(std::cin, options, threads));
  std::ifstream file(batch_file);
  if (!file) {
    std::cerr << "error: cannot open " << batch_file << "\n";
    return monodromy::kExitParse;
  }
  return finish(monodromy::run_batch(file, options, threads));
}
