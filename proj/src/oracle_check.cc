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

#include "qsd/oracle_check.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsd/oracle.h"
#include "qsd/random.h"
#include "qsd/walk.h"

namespace qsd {

namespace {

std::optional<double> phase_or_empty(const RegisterState &reg) {
    auto [a, b] = psi_moduli(reg);
    if (a < kPhaseModulusFloor || b < kPhaseModulusFloor) {
        return std::nullopt;
    }
    return relative_phase(reg);
}

}  // namespace

std::vector<PhaseTableRow> phase_table(uint32_t mu_max) {
    std::vector<PhaseTableRow> rows;
    for (uint32_t mu = 0; mu <= mu_max; mu++) {
        uint32_t t = 2 * mu + 1;
        PhaseTableRow row;
        row.mu = mu;
        row.t = t;
        row.per_step_expected = std::numbers::pi / (2.0 * t);
        RegisterState reg = project_ax(apply_p(prepare_register(StateLabel::kPlus, mu), t), Outcome::kZero);
        row.phase_after_zero = phase_or_empty(reg);
        if (row.phase_after_zero) {
            reg = project_ax(apply_p(std::move(reg), t), Outcome::kOne);
            row.phase_after_zero_one = phase_or_empty(reg);
        }
        rows.push_back(row);
    }
    return rows;
}

OracleCheckSummary run_oracle_check(const OracleCheckConfig &config) {
    if (config.mu_max > kMaxOracleDummies) {
        throw std::invalid_argument("mu_max must be <= " + std::to_string(kMaxOracleDummies));
    }
    if (config.max_steps < 1) {
        throw std::invalid_argument("max_steps must be >= 1");
    }
    OracleCheckSummary summary;
    summary.cases = config.cases;
    for (uint64_t c = 0; c < config.cases; c++) {
        SplitMix64 rng(trial_seed(config.seed, c));
        auto mu = static_cast<uint32_t>(rng.uniform() * (config.mu_max + 1));
        double phi = rng.uniform() * 2 * std::numbers::pi;
        auto steps = 1 + static_cast<uint32_t>(rng.uniform() * config.max_steps);

        WalkParams params(mu);
        QubitState analytic = QubitState::from_angle(phi);
        RegisterState reg = prepare_register(analytic, mu);
        for (uint32_t s = 0; s < steps; s++) {
            AxProbabilities expected = ax_probabilities(analytic, params);
            OracleStep step = oracle_step(std::move(reg), rng.uniform());
            reg = std::move(step.next);
            summary.max_probability_diff = std::max(
                {summary.max_probability_diff,
                 std::abs(expected.p0 - step.probabilities.p0),
                 std::abs(expected.p1 - step.probabilities.p1)});

            analytic = collapse_update(analytic, step.outcome, params);
            auto [abs_alpha, abs_beta] = psi_moduli(reg);
            summary.max_modulus_diff = std::max(
                {summary.max_modulus_diff,
                 std::abs(std::abs(analytic.alpha) - abs_alpha),
                 std::abs(std::abs(analytic.beta) - abs_beta)});
            summary.max_norm_drift = std::max(summary.max_norm_drift, std::abs(analytic.norm_squared() - 1));
            summary.steps++;
        }
    }
    summary.phase_table = phase_table(config.mu_max);
    return summary;
}

}  // namespace qsd
