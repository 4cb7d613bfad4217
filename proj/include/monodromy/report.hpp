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

#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "monodromy/curve.hpp"
#include "monodromy/parser.hpp"
#include "monodromy/surface.hpp"
#include "monodromy/zeta.hpp"

namespace monodromy {

// Integers go out as JSON numbers when they fit in 64 bits, otherwise as
// decimal strings.
nlohmann::json integer_to_json(const BigInt& value);

// {"factors": [[k, e], ...]} with k ascending.
nlohmann::json zeta_to_json(const ZetaExpr& z);
ZetaExpr zeta_from_json(const nlohmann::json& j);

struct ReportOptions {
  bool json = false;
  bool cyclotomic = false;
  bool trace = false;
  char axis = 'x';
};

// Report objects. Keys are sorted (nlohmann::json uses std::map), so the
// serialized form is deterministic. Text output is rendered from the same
// object.
nlohmann::json curve_report(const CurveSeries& series, const ReportOptions& options);
nlohmann::json surface_report(const SurfaceSeries& series, const ReportOptions& options);
std::string render_report_text(const nlohmann::json& report);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMismatch = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// "-" reads stdin, an existing file path reads the file, anything else is
// taken as the series text itself.
std::string resolve_input(const std::string& argument);

CommandResult run_curve(std::string_view input, const ReportOptions& options);
CommandResult run_surface(std::string_view input, const ReportOptions& options);

struct VerifyOptions {
  int m_max = 6;
  int n_max = 6;
  int a_max = 6;
  int b_max = 4;
  // A single (m, n, a, b) instead of the grid.
  std::optional<std::array<int, 4>> point;
};

// Oracle against closed forms for one truncation.
struct TruncationCheck {
  bool skipped = false;
  std::string note;  // reason for skipping
  ZetaExpr oracle_horizontal;
  ZetaExpr formula_horizontal;
  ZetaExpr oracle_vertical;
  ZetaExpr formula_vertical;
  BigInt lattice_degree;
  BigInt recursion_degree;
  std::vector<std::string> mismatches;
};

TruncationCheck check_truncation(int m, int n, int a, int b);

struct VerifySummary {
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> mismatches;
};

VerifySummary verify_truncation_grid(const VerifyOptions& options);

CommandResult run_verify_truncation(const VerifyOptions& options);

// One JSON series per line in, one report (or {"error", "line"} object)
// per line out, in input order. Blank lines are skipped.
CommandResult run_batch(std::istream& in, const ReportOptions& options, unsigned threads = 0);

}  // namespace monodromy
