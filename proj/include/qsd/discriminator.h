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

// Single-copy discrimination of |0>, |1>, |+>, |->.
//
// A trial runs r weak measurement rounds, counting auxiliary outcomes. At the
// decision iteration k the empirical ratio j0/(j0+j1) is tested against an open
// interval; if it falls inside, the qubit is assumed to be Hadamard-encoded and
// an H gate is applied to it before the walk continues. The majority of the
// counters then picks the state within the decided basis.

#ifndef QSD_DISCRIMINATOR_H
#define QSD_DISCRIMINATOR_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsd/walk.h"

namespace qsd {

enum class StateLabel : uint8_t { kZero, kOne, kPlus, kMinus };

inline constexpr StateLabel kAllStates[] = {StateLabel::kZero, StateLabel::kOne, StateLabel::kPlus, StateLabel::kMinus};

enum class Basis : uint8_t { kComputational, kHadamard };

/// (1,0), (0,1), (1/sqrt2, 1/sqrt2), (1/sqrt2, -1/sqrt2).
QubitState canonical_state(StateLabel label);
Basis basis_of(StateLabel label);
/// Classical bit carried by the label under the usual BB84 encoding:
/// |0> and |+> carry 0, |1> and |-> carry 1.
int encoded_bit(StateLabel label);

std::string_view to_string(StateLabel label);
std::string_view to_string(Basis basis);
std::optional<StateLabel> parse_state_label(std::string_view text);

enum class DecisionMode : uint8_t {
    kInterval,
    kNeverApplyH,
    kAlwaysApplyH,
};

std::string_view to_string(DecisionMode mode);
std::optional<DecisionMode> parse_decision_mode(std::string_view text);

struct DecisionRule {
    uint32_t k = 2;
    double i1 = 0;
    double i2 = 1;
    DecisionMode mode = DecisionMode::kInterval;

    /// Throws std::invalid_argument unless k >= 1 and, in interval mode,
    /// 0 <= i1 < i2 <= 1.
    void validate() const;
    /// Strict interval test, or the fixed answer of the forced modes.
    bool triggers(double alpha_approx) const;
};

struct WalkCounters {
    uint32_t j0 = 0;
    uint32_t j1 = 0;

    uint32_t total() const { return j0 + j1; }
    void record(Outcome o) { (o == Outcome::kZero ? j0 : j1)++; }
    bool operator==(const WalkCounters &) const = default;
};

/// j0/(j0+j1). Throws std::domain_error when no outcome has been recorded.
double alpha_approx(const WalkCounters &counters);

/// ((alpha+beta)/sqrt2, (alpha-beta)/sqrt2).
QubitState apply_hadamard_update(const QubitState &state);

struct Classification {
    StateLabel label = StateLabel::kZero;
    bool tie = false;
};

/// Majority vote within the decided basis; ties go to |0> or |+>.
Classification classify(const WalkCounters &counters, bool h_applied);

/// One measurement round as seen after counter update (and, on the decision
/// iteration, after the optional H).
struct TraceRow {
    uint32_t iteration = 0;
    Outcome outcome = Outcome::kZero;
    double alpha = 0;
    double beta = 0;
    double alpha_approx = 0;
    uint32_t j0 = 0;
    uint32_t j1 = 0;
    bool h_applied = false;

    bool operator==(const TraceRow &) const = default;
};

struct TrialOutcome {
    bool h_applied = false;
    Basis decided_basis = Basis::kComputational;
    StateLabel decided_state = StateLabel::kZero;
    bool tie = false;
    WalkCounters counters;
    QubitState final_state;
    std::vector<TraceRow> trace;

    bool operator==(const TrialOutcome &) const = default;
};

enum class TraceMode : uint8_t { kRecord, kSkip };

/// Validates (r, rule) for run_trial. Throws std::invalid_argument.
void validate_trial(uint32_t r, const DecisionRule &rule);

/// Builds a TrialOutcome by walking from `initial` for r rounds, drawing one
/// uniform per round from `rng`.
template <UniformSource R>
TrialOutcome run_trial_from(
    const QubitState &initial,
    const WalkParams &params,
    const DecisionRule &rule,
    uint32_t r,
    R &rng,
    TraceMode trace_mode = TraceMode::kRecord) {
    validate_trial(r, rule);
    TrialOutcome result;
    if (trace_mode == TraceMode::kRecord) {
        result.trace.reserve(r);
    }
    QubitState state = initial;
    for (uint32_t j = 1; j <= r; j++) {
        auto [outcome, next] = weak_step(state, params, rng);
        state = next;
        result.counters.record(outcome);
        double ratio = alpha_approx(result.counters);
        if (j == rule.k && rule.triggers(ratio)) {
            state = apply_hadamard_update(state);
            result.h_applied = true;
        }
        if (trace_mode == TraceMode::kRecord) {
            result.trace.push_back(
                {j, outcome, state.alpha, state.beta, ratio, result.counters.j0, result.counters.j1, result.h_applied});
        }
    }
    Classification c = classify(result.counters, result.h_applied);
    result.decided_basis = result.h_applied ? Basis::kHadamard : Basis::kComputational;
    result.decided_state = c.label;
    result.tie = c.tie;
    result.final_state = state;
    return result;
}

template <UniformSource R>
TrialOutcome run_trial(
    StateLabel initial,
    const WalkParams &params,
    const DecisionRule &rule,
    uint32_t r,
    R &rng,
    TraceMode trace_mode = TraceMode::kRecord) {
    return run_trial_from(canonical_state(initial), params, rule, r, rng, trace_mode);
}

}  // namespace qsd

#endif  // QSD_DISCRIMINATOR_H
