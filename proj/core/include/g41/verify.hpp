// Copyright 2026 The g41 Authors
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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g41 {

inline constexpr std::string_view kVersion = "1.0.0";

enum class CheckStatus { pass, fail, skip };
enum class OutputFormat { text, json };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  CheckStatus status = CheckStatus::skip;
  std::optional<double> residual;
  std::optional<double> tolerance;
  double elapsed_ms = 0.0;
  /// Exception text when the check threw.
  std::string message;
};

struct RunConfig {
  std::uint64_t seed = 20260101;
  std::map<std::string, double> tolerance_overrides;
  double step_h = 1e-3;
  /// Empty means every registered check, in registration order.
  std::optional<std::vector<std::string>> selected_checks;
  OutputFormat output = OutputFormat::text;
};

struct CheckInfo {
  std::string name;
  std::string module;
  std::string paper_anchor;
  double tolerance;
};

/// Registered checks in registration order.
const std::vector<CheckInfo>& check_registry();

/// Throws UsageError for unknown check names, unknown tolerance names and a
/// non-positive or non-finite step.
void validate(const RunConfig& config);

/// Runs the selected checks in registration order. A check passes iff its
/// residual is within its (possibly overridden) tolerance; a check that
/// throws fails with no residual.
std::vector<CheckResult> run_suite(const RunConfig& config);

struct Summary {
  int pass = 0;
  int fail = 0;
  int skip = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<CheckResult>& results);

/// {version, seed, results, summary}. Timings are written as 0 when
/// include_timings is false, which makes equal-seed runs byte-identical.
std::string format_json(const RunConfig& config, const std::vector<CheckResult>& results,
                        bool include_timings = true);
std::string format_text(const std::vector<CheckResult>& results);
/// One line per registered check: name, module, tolerance, anchor.
std::string format_registry();

}  // namespace g41
