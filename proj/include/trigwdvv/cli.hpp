// Copyright 2026 The trigwdvv Authors
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

// Command-line surface: configuration files, seeded verification suites and
// JSON reports. Kept in the library so the runner is testable in-process.

#ifndef TRIGWDVV_CLI_HPP_
#define TRIGWDVV_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "trigwdvv/configuration.hpp"
#include "trigwdvv/sampling.hpp"

namespace trigwdvv {

inline constexpr const char* kToolVersion = "trigwdvv 0.1.0";

/// Seed used when neither --seed nor WDVV_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Tolerance applied to the finite-difference checks (gauge relation),
/// independent of --tol.
inline constexpr double kFiniteDifferenceTolerance = 1e-4;

enum class Command {
  kVerifyWdvv,
  kVerifyAssociativity,
  kVerifyMetric,
  kVerifyRestriction,
  kVerifySusy,
  kTensor,
  kBuildConfig,
};

std::string to_string(Command c);
/// Throws ParseError for unknown names.
Command parse_command(const std::string& name);

/// A configuration together with its family parameters when it came from
/// {"family": "bcn", ...}.
struct LoadedConfig {
  std::optional<BCnParameters> family;
  Configuration config;
};

/// Parses either {"family":"bcn","n":..,"r":..,"s":..,"q":..,"m":[..]} or
/// {"explicit":{"dimension":..,"members":[{"vector":[..],"multiplicity":..}]}}.
/// Missing or mistyped fields raise ParseError naming the field.
LoadedConfig parse_config(const nlohmann::json& doc);
LoadedConfig load_config_file(const std::string& path);

struct RunSpec {
  Command command = Command::kVerifyWdvv;
  std::string config_source;  // path, or "inline" for --family
  std::optional<LoadedConfig> config;
  int samples = 50;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-8;
  SampleBox box;
  double threshold = 0.05;
  double step = 1e-3;
  std::optional<Vector> point;  // tensor command only

  /// Throws PreconditionError when an invariant (samples >= 1, lo < hi,
  /// tolerance > 0, step > 0, threshold >= 0) does not hold.
  void validate() const;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  Vector worst_point;
  bool pass = true;
};

struct VerificationReport {
  RunSpec run;
  std::vector<CheckResult> checks;
  long discarded_points = 0;
  std::string version = kToolVersion;

  bool all_pass() const;
};

/// Runs the verification suite of spec.command (a verify-* command).
VerificationReport run(const RunSpec& spec);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// {"point":..,"F":[[[..]]],"B":[[..]],"h":..}; h is null for explicit
/// configurations.
nlohmann::ordered_json emit_tensor(const RunSpec& spec);

/// {"explicit":{"dimension":..,"members":[..]}}, accepted by parse_config.
nlohmann::ordered_json config_to_json(const Configuration& c);

/// Serialises with 17 significant digits for every floating-point value.
std::string dump_json(const nlohmann::ordered_json& doc, int indent = 2);

/// Human-readable one-line-per-check summary.
std::string format_summary(const VerificationReport& report);

}  // namespace trigwdvv

#endif  // TRIGWDVV_CLI_HPP_
