// Copyright 2026 The qsd Authors
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

// Text emitters for traces, reports and sweeps. Numbers go through
// std::to_chars, so output never depends on the process locale.

#ifndef QSD_REPORT_IO_H
#define QSD_REPORT_IO_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "qsd/discriminator.h"
#include "qsd/experiment.h"
#include "qsd/oracle_check.h"

namespace qsd {

enum class OutputFormat : uint8_t { kCsv, kJson, kHuman };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// 17 significant digits.
std::string format_full(double x);
/// 6 digits after the decimal point.
std::string format_fixed6(double x);

inline constexpr std::string_view kTraceCsvHeader = "trial_id,iteration,outcome,alpha,beta,alpha_approx,j0,j1,h_applied";

void write_trace_csv(std::ostream &out, uint64_t trial_id, const TrialOutcome &trial);
void write_trace_human(std::ostream &out, uint64_t trial_id, const TrialOutcome &trial);
/// "# trial_id=... state=... decided=... basis=... h_applied=... j0=... j1=... tie=..."
void write_trial_summary(std::ostream &out, uint64_t trial_id, StateLabel prepared, const TrialOutcome &trial);
void write_trials_json(
    std::ostream &out, StateLabel prepared, uint64_t seed, std::span<const TrialOutcome> trials);

void write_reports_json(
    std::ostream &out, std::span<const StateReport> reports, const ExperimentConfig &config);
void write_reports_human(
    std::ostream &out, std::span<const StateReport> reports, const ExperimentConfig &config);

inline constexpr std::string_view kSweepCsvHeader = "mu,success_computational,success_hadamard";
void write_sweep_csv(std::ostream &out, std::span<const SweepPoint> points);

void write_phase_report_json(std::ostream &out, std::span<const PhaseReportRow> rows, const ExperimentConfig &config);
void write_phase_report_human(std::ostream &out, std::span<const PhaseReportRow> rows, const ExperimentConfig &config);

void write_oracle_check(std::ostream &out, const OracleCheckConfig &config, const OracleCheckSummary &summary);

}  // namespace qsd

#endif  // QSD_REPORT_IO_H
