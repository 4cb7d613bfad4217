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

#include "monodromy/report.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "monodromy/bigraph.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/lattice.hpp"

namespace monodromy {

namespace {

using nlohmann::json;

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json pair_list(const std::vector<RationalPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({p.lambda.to_string(), p.mu.to_string()});
  return out;
}

json zeta_section(const ZetaExpr& z, const ReportOptions& options) {
  json out = zeta_to_json(z);
  out["string"] = zeta_render(z);
  if (options.cyclotomic) {
    const CycloForm cyclo = zeta_to_cyclotomic(z);
    json list = json::array();
    for (const auto& [d, e] : cyclo) list.push_back({integer_to_json(d), integer_to_json(e)});
    out["cyclotomic"] = list;
    out["cyclotomic_string"] = cyclo_render(cyclo);
  }
  return out;
}

std::string json_scalar(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

std::string joined(const json& list, bool pairs) {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += ", ";
    if (pairs) {
      out += "(" + json_scalar(item[0]) + ", " + json_scalar(item[1]) + ")";
    } else {
      out += json_scalar(item);
    }
  }
  return out.empty() ? "(none)" : out;
}

void render_zeta_text(std::ostringstream& os, const std::string& label, const json& section) {
  os << label << " = " << section["string"].get<std::string>() << "\n";
  os << "  factors:";
  if (section["factors"].empty()) os << " (none)";
  for (const auto& f : section["factors"]) os << " [" << json_scalar(f[0]) << ", " << json_scalar(f[1]) << "]";
  os << "\n";
  if (section.contains("cyclotomic")) {
    os << "  cyclotomic: " << section["cyclotomic_string"].get<std::string>() << "\n";
  }
}

CommandResult error_result(const Error& e, const ReportOptions& options) {
  CommandResult result;
  result.exit_code = is_parse_error(e.kind()) ? kExitParse : kExitValidation;
  if (options.json) {
    json out{{"error", e.what()}, {"kind", std::string(error_kind_name(e.kind()))}};
    if (e.offset()) out["offset"] = *e.offset();
    result.out = out.dump() + "\n";
  }
  result.err = std::string("error: ") + e.what() + "\n";
  return result;
}

CommandResult emit(const json& report, const ReportOptions& options) {
  CommandResult result;
  result.out = options.json ? report.dump() + "\n" : render_report_text(report);
  return result;
}

}  // namespace

json integer_to_json(const BigInt& value) {
  if (fits_int64(value)) return to_int64(value);
  return value.get_str();
}

json zeta_to_json(const ZetaExpr& z) {
  json factors = json::array();
  for (const auto& [k, e] : z.factors()) factors.push_back({integer_to_json(k), integer_to_json(e)});
  return json{{"factors", factors}};
}

ZetaExpr zeta_from_json(const json& j) {
  auto integer = [](const json& v) {
    if (v.is_number_integer()) return BigInt(v.dump(), 10);
    if (v.is_string()) return BigInt(v.get<std::string>(), 10);
    throw Error(ErrorKind::kSyntax, "zeta factor entries must be integers");
  };
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
    throw Error(ErrorKind::kSyntax, "zeta JSON needs a \"factors\" array");
  }
  ZetaExpr::FactorMap factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_array() || f.size() != 2) throw Error(ErrorKind::kSyntax, "zeta factor must be [k, e]");
    const BigInt k = integer(f[0]);
    if (k <= 0) throw Error(ErrorKind::kSyntax, "zeta factor index must be positive");
    factors[k] += integer(f[1]);
  }
  return ZetaExpr(factors);
}

json curve_report(const CurveSeries& series, const ReportOptions& options) {
  const CurveCharacteristics c = curve_characteristics(series);
  const CurveInvariants inv = curve_invariants(c);

  json report;
  report["kind"] = "curve";
  report["input"] = render_series(series);
  report["characteristics"] = rational_list(c.mus());
  report["e"] = c.size();
  report["degree"] = integer_to_json(inv.degree);
  report["euler"] = integer_to_json(inv.euler);
  report["horizontal"] = zeta_section(inv.horizontal, options);
  if (options.trace) {
    json trace = json::array();
    int level = 1;
    for (const auto& row : curve_trace(c)) {
      trace.push_back({{"level", level++},
                       {"characteristics", rational_list(row.characteristics.mus())},
                       {"m", integer_to_json(row.truncation.m)},
                       {"n", integer_to_json(row.truncation.n)}});
    }
    report["trace"] = trace;
  }
  return report;
}

json surface_report(const SurfaceSeries& input, const ReportOptions& options) {
  const SurfaceSeries series = options.axis == 'y' ? swap_axes(input) : input;
  const SurfaceCharacteristics c = surface_characteristics(series);
  const SurfaceReduction reduction = reduce_surface(c);
  const SurfaceInvariants inv = surface_invariants(reduction.reduced);

  json report;
  report["kind"] = "surface";
  report["input"] = render_series(input);
  report["axis"] = std::string(1, options.axis);
  report["characteristics"] = pair_list(c.pairs());
  report["e"] = reduction.reduced.size();
  report["reduction"] = {{"N", integer_to_json(reduction.factor)},
                         {"characteristics", pair_list(reduction.reduced.pairs())}};
  report["degree"] = integer_to_json(inv.degree);
  report["euler"] = integer_to_json(inv.euler);
  report["horizontal"] = zeta_section(inv.horizontal, options);
  report["vertical"] = zeta_section(inv.vertical, options);
  if (options.trace) {
    json trace = json::array();
    int level = 1;
    for (const auto& row : surface_trace(reduction.reduced)) {
      const auto& p = row.params;
      trace.push_back({{"level", level++},
                       {"characteristics", pair_list(row.characteristics.pairs())},
                       {"m", integer_to_json(p.m)},
                       {"n", integer_to_json(p.n)},
                       {"a", integer_to_json(p.a)},
                       {"b", integer_to_json(p.b)},
                       {"r", integer_to_json(p.r)},
                       {"s", integer_to_json(p.s)}});
    }
    report["trace"] = trace;
  }
  return report;
}

std::string render_report_text(const json& report) {
  std::ostringstream os;
  const bool surface = report["kind"] == "surface";
  os << (surface ? "surface: " : "curve: ") << report["input"].get<std::string>() << "\n";
  if (surface) {
    os << "axis: " << report["axis"].get<std::string>() << "\n";
    os << "characteristic pairs: " << joined(report["characteristics"], true) << "\n";
    const json& reduction = report["reduction"];
    os << "reduction: N = " << json_scalar(reduction["N"]) << ", pairs: "
       << joined(reduction["characteristics"], true) << "\n";
  } else {
    os << "essential exponents: " << joined(report["characteristics"], false) << "\n";
  }
  os << "levels e = " << report["e"].dump() << "\n";
  if (report.contains("trace")) {
    os << "trace:\n";
    for (const auto& row : report["trace"]) {
      os << "  level " << row["level"].dump() << ": m=" << json_scalar(row["m"])
         << " n=" << json_scalar(row["n"]);
      if (surface) {
        os << " a=" << json_scalar(row["a"]) << " b=" << json_scalar(row["b"])
           << " r=" << json_scalar(row["r"]) << " s=" << json_scalar(row["s"]);
      }
      os << "  data: " << joined(row["characteristics"], surface) << "\n";
    }
  }
  os << "degree d = " << json_scalar(report["degree"]) << "\n";
  os << "euler characteristic chi = " << json_scalar(report["euler"]) << "\n";
  render_zeta_text(os, "horizontal monodromy H(t)", report["horizontal"]);
  if (surface) render_zeta_text(os, "vertical monodromy V(t)", report["vertical"]);
  return os.str();
}

std::string resolve_input(const std::string& argument) {
  if (argument == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::error_code ec;
  if (argument.size() < 4096 && std::filesystem::is_regular_file(argument, ec)) {
    std::ifstream file(argument);
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return argument;
}

CommandResult run_curve(std::string_view input, const ReportOptions& options) {
  try {
    return emit(curve_report(parse_curve(input), options), options);
  } catch (const Error& e) {
    return error_result(e, options);
  }
}

CommandResult run_surface(std::string_view input, const ReportOptions& options) {
  try {
    return emit(surface_report(parse_surface(input), options), options);
  } catch (const Error& e) {
    return error_result(e, options);
  }
}

TruncationCheck check_truncation(int m, int n, int a, int b) {
  TruncationCheck check;
  const std::string where = "(m, n, a, b) = (" + std::to_string(m) + ", " + std::to_string(n) +
                            ", " + std::to_string(a) + ", " + std::to_string(b) + ")";
  try {
    check_bigraph_params(BigraphShape{m, n, a, b});
  } catch (const Error& e) {
    check.skipped = true;
    check.note = "skipped " + where + ": " + e.what();
    return check;
  }

  const CellPermutation horizontal = build_horizontal_permutation(m, n, a, b);
  const CellPermutation vertical = build_vertical_permutation(m, n, a, b);
  SurfaceTruncationParams params;
  params.m = m;
  params.n = n;
  params.a = a;
  params.b = b;

  check.oracle_horizontal = permutation_zeta(horizontal);
  check.formula_horizontal = surface_truncation_horizontal(params);
  check.oracle_vertical = permutation_zeta(vertical);
  check.formula_vertical = surface_truncation_vertical(params);

  const RationalPair pair{Rational(BigInt(a), BigInt(m * b)), Rational(BigInt(n), BigInt(m))};
  const std::vector<RationalPair> generators{pair};
  check.lattice_degree = lattice_index(generators);
  check.recursion_degree =
      surface_invariants(surface_characteristics(SurfaceSeries(generators))).degree;

  if (!zeta_equals(check.oracle_horizontal, check.formula_horizontal)) {
    check.mismatches.push_back(where + ": horizontal oracle " + zeta_render(check.oracle_horizontal) +
                               " != formula " + zeta_render(check.formula_horizontal));
  }
  if (!zeta_equals(check.oracle_vertical, check.formula_vertical)) {
    check.mismatches.push_back(where + ": vertical oracle " + zeta_render(check.oracle_vertical) +
                               " != formula " + zeta_render(check.formula_vertical));
  }
  if (compose(horizontal, vertical) != compose(vertical, horizontal)) {
    check.mismatches.push_back(where + ": horizontal and vertical permutations do not commute");
  }
  if (check.lattice_degree != check.recursion_degree || check.lattice_degree != m * b) {
    check.mismatches.push_back(where + ": lattice index " + check.lattice_degree.get_str() +
                               " vs recursion degree " + check.recursion_degree.get_str() +
                               " vs mb = " + std::to_string(m * b));
  }
  return check;
}

VerifySummary verify_truncation_grid(const VerifyOptions& options) {
  VerifySummary summary;
  for (int m = 1; m <= options.m_max; ++m) {
    for (int n = 1; n <= options.n_max; ++n) {
      for (int a = 0; a <= options.a_max; ++a) {
        for (int b = 1; b <= options.b_max; ++b) {
          TruncationCheck check = check_truncation(m, n, a, b);
          if (check.skipped) {
            ++summary.skipped;
            continue;
          }
          ++summary.checked;
          for (auto& line : check.mismatches) summary.mismatches.push_back(std::move(line));
        }
      }
    }
  }
  return summary;
}

CommandResult run_verify_truncation(const VerifyOptions& options) {
  CommandResult result;
  std::ostringstream os;
  if (options.point) {
    const auto [m, n, a, b] = *options.point;
    const TruncationCheck check = check_truncation(m, n, a, b);
    if (check.skipped) {
      os << check.note << "\n";
      result.out = os.str();
      return result;
    }
    os << "horizontal oracle:  " << zeta_render(check.oracle_horizontal) << "\n";
    os << "horizontal formula: " << zeta_render(check.formula_horizontal) << "\n";
    os << "vertical oracle:    " << zeta_render(check.oracle_vertical) << "\n";
    os << "vertical formula:   " << zeta_render(check.formula_vertical) << "\n";
    os << "degree: lattice index " << check.lattice_degree.get_str() << ", recursion "
       << check.recursion_degree.get_str() << "\n";
    for (const auto& line : check.mismatches) os << "mismatch: " << line << "\n";
    os << check.mismatches.size() << " mismatches\n";
    result.exit_code = check.mismatches.empty() ? kExitOk : kExitMismatch;
    result.out = os.str();
    return result;
  }

  const VerifySummary summary = verify_truncation_grid(options);
  for (const auto& line : summary.mismatches) os << "mismatch: " << line << "\n";
  os << "grid m<=" << options.m_max << " n<=" << options.n_max << " a<=" << options.a_max
     << " b<=" << options.b_max << ": checked " << summary.checked << " points, skipped "
     << summary.skipped << " (non-coprime parameters)\n";
  os << summary.mismatches.size() << " mismatches\n";
  result.exit_code = summary.mismatches.empty() ? kExitOk : kExitMismatch;
  result.out = os.str();
  return result;
}

CommandResult run_batch(std::istream& in, const ReportOptions& options, unsigned threads) {
  struct Job {
    std::size_t line_number;
    std::string text;
    std::string output;
  };
  std::vector<Job> jobs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    jobs.push_back({line_number, line, {}});
  }
  if (in.bad()) {
    CommandResult failed;
    failed.exit_code = kExitParse;
    failed.err = "error: failed reading batch input\n";
    return failed;
  }

  auto process = [&options](Job& job) {
    try {
      json object;
      try {
        object = json::parse(job.text);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::kSyntax, std::string("invalid JSON: ") + e.what());
      }
      ReportOptions line_options = options;
      if (object.is_object() && object.contains("axis")) {
        const json& axis = object["axis"];
        if (axis != "x" && axis != "y") throw Error(ErrorKind::kSyntax, "axis must be \"x\" or \"y\"");
        line_options.axis = axis.get<std::string>()[0];
      }
      const Series series = series_from_json(object);
      const json report = std::holds_alternative<CurveSeries>(series)
                              ? curve_report(std::get<CurveSeries>(series), line_options)
                              : surface_report(std::get<SurfaceSeries>(series), line_options);
      job.output = report.dump();
    } catch (const Error& e) {
      job.output = json{{"error", e.what()}, {"line", job.line_number}}.dump();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) process(jobs[i]);
      });
    }
  }

  CommandResult result;
  for (const auto& job : jobs) result.out += job.output + "\n";
  return result;
}

}  // namespace monodromy
