// Copyright 2026 The weylgate Authors
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

#ifndef WEYLGATE_CLI_H
#define WEYLGATE_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylgate/canonical.h"
#include "weylgate/edges.h"
#include "weylgate/gates.h"
#include "weylgate/invariants.h"
#include "weylgate/schmidt.h"

namespace weylgate {

/// Process exit codes of the weylgate tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 1,
    kExitValidation = 2,
    kExitNumerical = 3,
    kExitIo = 4,
    kExitTableMismatch = 5,
    kExitAuditFailure = 6,
};

struct AnalysisReport {
    std::string source;
    CanonicalPoint point;
    LocalInvariants invariants;
    std::array<double, 4> coefficients{};
    int schmidt_number = 0;
    double strength = 0.0;
    bool perfect_entangler = false;
    bool controlled_unitary = false;
};

AnalysisReport analyze(const Gate &g, const std::string &source);

/// Six decimals, angles in radians unless `degrees`.
std::string report_text(const AnalysisReport &r, bool degrees = false);
/// Numbers rounded to 15 significant digits.
nlohmann::json report_json(const AnalysisReport &r, bool degrees = false);

enum class AuditFamily { Haar, ControlledUnitaryLine };

struct AuditOptions {
    int samples = 1000;
    std::uint64_t seed = 0;
    AuditFamily family = AuditFamily::Haar;
    ZEngine z_engine = z_from_point;
};

struct AuditResult {
    int samples = 0;
    double max_route_deviation = 0.0;
    double max_coefficient_deviation = 0.0;
    double max_invariant_deviation = 0.0;
    std::array<int, 5> schmidt_histogram{};  // index = Schmidt number
    int perfect_entanglers = 0;
    std::optional<double> chamber_volume_fraction;  // Haar family only
    bool passed = true;
    std::vector<std::string> failures;
    std::optional<Gate> counterexample;
};

inline constexpr double kAuditRouteTol = 1e-8;
inline constexpr double kAuditLocalTol = 1e-9;
inline constexpr double kAuditVolumeTol = 0.05;
inline constexpr int kAuditVolumeMinSamples = 1000;

AuditResult run_audit(const AuditOptions &opts);
void print_audit(std::ostream &out, const AuditOptions &opts, const AuditResult &r);

struct CliHooks {
    /// Replaces z_from_point in verify-tables and audit (fault-injection tests).
    ZEngine z_engine = z_from_point;
};

/// Runs the tool with argv-style arguments (args[0] is the program name) and
/// returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const CliHooks &hooks = {});

}  // namespace weylgate

#endif
