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

#include "qsd/experiment.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qsd/oracle.h"

namespace qsd {

namespace {

struct Tally {
    uint64_t h_success = 0;
    uint64_t h_failure = 0;
    uint64_t no_h_success = 0;
    uint64_t no_h_failure = 0;
    uint64_t exact = 0;
    uint64_t ties = 0;

    void add(StateLabel truth, const TrialOutcome &t) {
        bool success = encoded_bit(t.decided_state) == encoded_bit(truth);
        if (t.h_applied) {
            (success ? h_success : h_failure)++;
        } else {
            (success ? no_h_success : no_h_failure)++;
        }
        exact += t.decided_state == truth;
        ties += t.tie;
    }

    Tally &operator+=(const Tally &o) {
        h_success += o.h_success;
        h_failure += o.h_failure;
        no_h_success += o.no_h_success;
        no_h_failure += o.no_h_failure;
        exact += o.exact;
        ties += o.ties;
        return *this;
    }

    uint64_t total_success() const { return h_success + no_h_success; }
};

unsigned resolve_threads(unsigned requested, uint64_t work) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<uint64_t>(n, std::max<uint64_t>(work, 1)));
}

// Splits [0, count) into contiguous chunks, one per thread, and sums the
// per-chunk tallies. Integer sums make the result schedule-independent.
template <typename TrialFn>
Tally tally_trials(uint64_t count, unsigned threads, TrialFn &&fn) {
    unsigned n = resolve_threads(threads, count);
    std::vector<Tally> partial(n);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(n);
        for (unsigned w = 0; w < n; w++) {
            uint64_t begin = count * w / n;
            uint64_t end = count * (w + 1) / n;
            workers.emplace_back([&, w, begin, end] {
                try {
                    for (uint64_t i = begin; i < end; i++) {
                        fn(i, partial[w]);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    Tally total;
    for (const Tally &t : partial) {
        total += t;
    }
    return total;
}

StateReport make_report(StateLabel state, uint64_t trials, const Tally &t) {
    double n = static_cast<double>(trials);
    StateReport r;
    r.state = state;
    r.trials = trials;
    r.frac_h_applied = static_cast<double>(t.h_success + t.h_failure) / n;
    r.frac_no_h = static_cast<double>(t.no_h_success + t.no_h_failure) / n;
    r.success_given_h = static_cast<double>(t.h_success) / n;
    r.failure_given_h = static_cast<double>(t.h_failure) / n;
    r.success_given_no_h = static_cast<double>(t.no_h_success) / n;
    r.failure_given_no_h = static_cast<double>(t.no_h_failure) / n;
    r.total_success = static_cast<double>(t.total_success()) / n;
    r.exact_label_success = static_cast<double>(t.exact) / n;
    r.tie_count = t.ties;
    return r;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (states.empty()) {
        throw std::invalid_argument("at least one state is required");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    validate_trial(r, rule);
}

std::vector<StateReport> run_experiment(const ExperimentConfig &config) {
    config.validate();
    WalkParams params(config.mu);
    std::vector<StateReport> reports;
    for (StateLabel state : config.states) {
        Tally t = tally_trials(config.trials, config.threads, [&](uint64_t i, Tally &acc) {
            SplitMix64 rng(trial_seed(config.master_seed, i));
            acc.add(state, run_trial(state, params, config.rule, config.r, rng, TraceMode::kSkip));
        });
        reports.push_back(make_report(state, config.trials, t));
    }
    return reports;
}

std::vector<SweepPoint> sweep_mu(const ExperimentConfig &base, std::span<const uint32_t> mu_values) {
    if (mu_values.empty()) {
        throw std::invalid_argument("mu sweep needs at least one value");
    }
    std::vector<SweepPoint> points;
    for (uint32_t mu : mu_values) {
        ExperimentConfig config = base;
        config.mu = mu;
        config.states = {std::begin(kAllStates), std::end(kAllStates)};
        std::vector<StateReport> reports = run_experiment(config);
        SweepPoint p;
        p.mu = mu;
        p.success_computational = (reports[0].total_success + reports[1].total_success) / 2;
        p.success_hadamard = (reports[2].total_success + reports[3].total_success) / 2;
        points.push_back(p);
    }
    return points;
}

std::vector<StateTraces> collect_traces(const ExperimentConfig &config, uint64_t sample_count) {
    config.validate();
    if (sample_count > config.trials) {
        throw std::invalid_argument("sample_count must not exceed trials");
    }
    WalkParams params(config.mu);
    std::vector<StateTraces> out;
    for (StateLabel state : config.states) {
        StateTraces traces{state, {}};
        traces.trials.reserve(sample_count);
        for (uint64_t i = 0; i < sample_count; i++) {
            SplitMix64 rng(trial_seed(config.master_seed, i));
            traces.trials.push_back(run_trial(state, params, config.rule, config.r, rng));
        }
        out.push_back(std::move(traces));
    }
    return out;
}

TrialOutcome run_phase_tracking_trial(
    StateLabel initial, uint32_t mu, const DecisionRule &rule, uint32_t r, SplitMix64 &rng) {
    validate_trial(r, rule);
    TrialOutcome result;
    RegisterState reg = prepare_register(initial, mu);
    for (uint32_t j = 1; j <= r; j++) {
        OracleStep step = oracle_step(std::move(reg), rng.uniform());
        reg = std::move(step.next);
        result.counters.record(step.outcome);
        if (j == rule.k && rule.triggers(alpha_approx(result.counters))) {
            reg = apply_hadamard_psi(std::move(reg));
            result.h_applied = true;
        }
    }
    Classification c = classify(result.counters, result.h_applied);
    result.decided_basis = result.h_applied ? Basis::kHadamard : Basis::kComputational;
    result.decided_state = c.label;
    result.tie = c.tie;
    auto [abs_alpha, abs_beta] = psi_moduli(reg);
    result.final_state = {abs_alpha, abs_beta};
    return result;
}

std::vector<PhaseReportRow> phase_report(const ExperimentConfig &config) {
    config.validate();
    if (config.mu > kMaxOracleDummies) {
        throw std::invalid_argument("phase report runs on the dense register; mu must be <= 20");
    }
    WalkParams params(config.mu);
    std::vector<PhaseReportRow> rows;
    for (StateLabel state : config.states) {
        Tally real = tally_trials(config.trials, config.threads, [&](uint64_t i, Tally &acc) {
            SplitMix64 rng(trial_seed(config.master_seed, i));
            acc.add(state, run_trial(state, params, config.rule, config.r, rng, TraceMode::kSkip));
        });
        Tally tracked = tally_trials(config.trials, config.threads, [&](uint64_t i, Tally &acc) {
            SplitMix64 rng(trial_seed(config.master_seed, i));
            acc.add(state, run_phase_tracking_trial(state, config.mu, config.rule, config.r, rng));
        });
        double n = static_cast<double>(config.trials);
        PhaseReportRow row;
        row.state = state;
        row.real_total_success = static_cast<double>(real.total_success()) / n;
        row.complex_total_success = static_cast<double>(tracked.total_success()) / n;
        row.abs_difference = std::abs(row.real_total_success - row.complex_total_success);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qsd
