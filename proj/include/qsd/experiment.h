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

// Seeded Monte Carlo harness around run_trial.
//
// Trial i of every state draws from SplitMix64(trial_seed(master_seed, i)), so
// different states, different mu values, and the real/phase-tracking variants
// all see the same uniform stream for the same trial index. Aggregation is a
// sum of integer counts and therefore independent of thread scheduling.
//
// A trial counts as a success when the classical bit of the decided state
// matches the bit of the prepared state (|0>,|+> -> 0 and |1>,|-> -> 1). This
// is the eavesdropper's figure of merit; exact label agreement is reported
// separately as exact_label_success.

#ifndef QSD_EXPERIMENT_H
#define QSD_EXPERIMENT_H

#include <cstdint>
#include <span>
#include <vector>

#include "qsd/discriminator.h"
#include "qsd/random.h"
#include "qsd/walk.h"

namespace qsd {

struct ExperimentConfig {
    std::vector<StateLabel> states{std::begin(kAllStates), std::end(kAllStates)};
    uint64_t trials = 100000;
    uint32_t r = 100;
    uint32_t mu = 2;
    DecisionRule rule;
    uint64_t master_seed = 0;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws std::invalid_argument.
    void validate() const;
};

struct StateReport {
    StateLabel state = StateLabel::kZero;
    uint64_t trials = 0;
    double frac_h_applied = 0;
    double frac_no_h = 0;
    double success_given_h = 0;
    double failure_given_h = 0;
    double success_given_no_h = 0;
    double failure_given_no_h = 0;
    double total_success = 0;
    double exact_label_success = 0;
    uint64_t tie_count = 0;

    bool operator==(const StateReport &) const = default;
};

std::vector<StateReport> run_experiment(const ExperimentConfig &config);

struct SweepPoint {
    uint32_t mu = 0;
    /// Mean total_success over |0> and |1>.
    double success_computational = 0;
    /// Mean total_success over |+> and |->.
    double success_hadamard = 0;

    bool operator==(const SweepPoint &) const = default;
};

/// Runs the four promised states at each mu. base.states is ignored.
std::vector<SweepPoint> sweep_mu(const ExperimentConfig &base, std::span<const uint32_t> mu_values);

struct StateTraces {
    StateLabel state = StateLabel::kZero;
    std::vector<TrialOutcome> trials;
};

/// Full traces for trials 0 .. sample_count-1 of each configured state; these
/// are the same trials run_experiment aggregates.
std::vector<StateTraces> collect_traces(const ExperimentConfig &config, uint64_t sample_count);

/// Paired comparison between the real walk (amplitudes updated with moduli,
/// H applied to real amplitudes) and the dense register, which keeps the
/// relative phase that every measurement round adds to psi.
struct PhaseReportRow {
    StateLabel state = StateLabel::kZero;
    double real_total_success = 0;
    double complex_total_success = 0;
    /// |real - complex|.
    double abs_difference = 0;

    bool operator==(const PhaseReportRow &) const = default;
};

std::vector<PhaseReportRow> phase_report(const ExperimentConfig &config);

/// Decides one trial on the dense register instead of the real walk.
/// No trace is recorded; final_state holds the psi moduli.
TrialOutcome run_phase_tracking_trial(
    StateLabel initial, uint32_t mu, const DecisionRule &rule, uint32_t r, SplitMix64 &rng);

}  // namespace qsd

#endif  // QSD_EXPERIMENT_H
