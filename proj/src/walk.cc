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

#include "qsd/walk.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsd {

QubitState QubitState::from_angle(double phi) {
    return {std::cos(phi), std::sin(phi)};
}

WalkParams::WalkParams(uint32_t mu) : mu_(mu) {
    double half_turn = std::numbers::pi / (2.0 * static_cast<double>(t()));
    double a0 = half_turn * static_cast<double>(d0());
    double a1 = half_turn * static_cast<double>(d1());
    cos_d0_ = std::cos(a0);
    cos_d1_ = std::cos(a1);
    sin_d0_ = std::sin(a0);
    sin_d1_ = std::sin(a1);
}

AxProbabilities ax_probabilities(const QubitState &state, const WalkParams &params) {
    double n2 = state.norm_squared();
    if (!(std::abs(n2 - 1) <= kNormInputTolerance)) {
        throw std::domain_error("qubit state is not normalized (alpha^2 + beta^2 = " + std::to_string(n2) + ")");
    }
    double a2 = state.alpha * state.alpha / n2;
    double b2 = state.beta * state.beta / n2;
    double c0 = params.cos_d0(), c1 = params.cos_d1();
    double s0 = params.sin_d0(), s1 = params.sin_d1();
    return {a2 * c0 * c0 + b2 * c1 * c1, a2 * s0 * s0 + b2 * s1 * s1};
}

QubitState collapse_update(const QubitState &state, Outcome outcome, const WalkParams &params) {
    AxProbabilities probs = ax_probabilities(state, params);
    if (probs.of(outcome) <= kMinOutcomeProbability) {
        throw std::domain_error(
            "cannot condition on auxiliary outcome " + std::to_string(bit(outcome)) + " with probability " +
            std::to_string(probs.of(outcome)));
    }
    QubitState next;
    if (outcome == Outcome::kZero) {
        next = {state.alpha * params.cos_d0(), state.beta * params.cos_d1()};
    } else {
        next = {state.alpha * params.sin_d0(), state.beta * params.sin_d1()};
    }
    double norm = std::hypot(next.alpha, next.beta);
    next.alpha /= norm;
    next.beta /= norm;
    return next;
}

}  // namespace qsd
