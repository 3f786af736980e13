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

#include "qsd/discriminator.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsd {

QubitState canonical_state(StateLabel label) {
    constexpr double h = std::numbers::sqrt2 / 2;
    switch (label) {
        case StateLabel::kZero:
            return {1, 0};
        case StateLabel::kOne:
            return {0, 1};
        case StateLabel::kPlus:
            return {h, h};
        case StateLabel::kMinus:
            return {h, -h};
    }
    throw std::invalid_argument("unknown state label");
}

Basis basis_of(StateLabel label) {
    return label == StateLabel::kZero || label == StateLabel::kOne ? Basis::kComputational : Basis::kHadamard;
}

int encoded_bit(StateLabel label) {
    return label == StateLabel::kOne || label == StateLabel::kMinus ? 1 : 0;
}

std::string_view to_string(StateLabel label) {
    switch (label) {
        case StateLabel::kZero:
            return "zero";
        case StateLabel::kOne:
            return "one";
        case StateLabel::kPlus:
            return "plus";
        case StateLabel::kMinus:
            return "minus";
    }
    return "?";
}

std::string_view to_string(Basis basis) {
    return basis == Basis::kComputational ? "computational" : "hadamard";
}

std::optional<StateLabel> parse_state_label(std::string_view text) {
    for (StateLabel s : kAllStates) {
        if (text == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view to_string(DecisionMode mode) {
    switch (mode) {
        case DecisionMode::kInterval:
            return "interval";
        case DecisionMode::kNeverApplyH:
            return "never-apply-h";
        case DecisionMode::kAlwaysApplyH:
            return "always-apply-h";
    }
    return "?";
}

std::optional<DecisionMode> parse_decision_mode(std::string_view text) {
    for (DecisionMode m : {DecisionMode::kInterval, DecisionMode::kNeverApplyH, DecisionMode::kAlwaysApplyH}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    return std::nullopt;
}

void DecisionRule::validate() const {
    if (k < 1) {
        throw std::invalid_argument("decision iteration k must be >= 1");
    }
    if (mode == DecisionMode::kInterval && !(0 <= i1 && i1 < i2 && i2 <= 1)) {
        throw std::invalid_argument("decision interval must satisfy 0 <= i1 < i2 <= 1");
    }
}

bool DecisionRule::triggers(double ratio) const {
    switch (mode) {
        case DecisionMode::kInterval:
            return i1 < ratio && ratio < i2;
        case DecisionMode::kNeverApplyH:
            return false;
        case DecisionMode::kAlwaysApplyH:
            return true;
    }
    return false;
}

double alpha_approx(const WalkCounters &counters) {
    if (counters.total() == 0) {
        throw std::domain_error("alpha_approx is undefined before the first measurement");
    }
    return static_cast<double>(counters.j0) / static_cast<double>(counters.total());
}

QubitState apply_hadamard_update(const QubitState &state) {
    constexpr double h = std::numbers::sqrt2 / 2;
    return {(state.alpha + state.beta) * h, (state.alpha - state.beta) * h};
}

Classification classify(const WalkCounters &counters, bool h_applied) {
    bool ones_win = counters.j1 > counters.j0;
    Classification c;
    if (h_applied) {
        c.label = ones_win ? StateLabel::kMinus : StateLabel::kPlus;
    } else {
        c.label = ones_win ? StateLabel::kOne : StateLabel::kZero;
    }
    c.tie = counters.j0 == counters.j1;
    return c;
}

void validate_trial(uint32_t r, const DecisionRule &rule) {
    if (r < 1) {
        throw std::invalid_argument("iteration count r must be >= 1");
    }
    rule.validate();
    if (rule.k > r) {
        throw std::invalid_argument(
            "decision iteration k (" + std::to_string(rule.k) + ") must satisfy k <= r (" + std::to_string(r) + ")");
    }
}

}  // namespace qsd
