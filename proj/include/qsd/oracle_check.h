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

#ifndef QSD_ORACLE_CHECK_H
#define QSD_ORACLE_CHECK_H

#include <cstdint>
#include <optional>
#include <vector>

namespace qsd {

inline constexpr double kOracleAgreementTolerance = 1e-10;

struct OracleCheckConfig {
    uint32_t mu_max = 4;
    uint64_t cases = 1000;
    uint32_t max_steps = 20;
    uint64_t seed = 0;
};

/// Relative phase of psi after one outcome-0 round and after an outcome-0 then
/// outcome-1 pair, both from |+>. Empty when the phase is undefined (mu = 0
/// collapses |+> onto |0> on outcome 0).
struct PhaseTableRow {
    uint32_t mu = 0;
    uint32_t t = 0;
    std::optional<double> phase_after_zero;
    std::optional<double> phase_after_zero_one;
    /// pi/2t, the phase one round is expected to add.
    double per_step_expected = 0;
};

struct OracleCheckSummary {
    uint64_t cases = 0;
    uint64_t steps = 0;
    double max_probability_diff = 0;
    double max_modulus_diff = 0;
    /// Worst |alpha^2 + beta^2 - 1| seen along the analytic walks.
    double max_norm_drift = 0;
    std::vector<PhaseTableRow> phase_table;

    bool passed() const {
        return max_probability_diff < kOracleAgreementTolerance && max_modulus_diff < kOracleAgreementTolerance;
    }
};

/// Random start angles, mu in [0, mu_max], walk lengths in [1, max_steps];
/// outcomes are sampled on the register and replayed on the analytic walk.
/// Throws std::invalid_argument when mu_max exceeds the register cap.
OracleCheckSummary run_oracle_check(const OracleCheckConfig &config);

std::vector<PhaseTableRow> phase_table(uint32_t mu_max);

}  // namespace qsd

#endif  // QSD_ORACLE_CHECK_H
