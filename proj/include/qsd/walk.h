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

// Analytic measurement-based random walk of an unknown real qubit that is
// weakly entangled with an auxiliary qubit through a chain of controlled
// partial negations, then read out by sharply measuring the auxiliary.
//
// The unknown qubit's |0> branch carries 1-density mu (only the dummies are
// set) and its |1> branch carries mu+1, so with t = 2mu+1 the two branches see
// complementary angles and cos(d0*pi/2t) = sin(d1*pi/2t).

#ifndef QSD_WALK_H
#define QSD_WALK_H

#include <cstdint>
#include <utility>

#include "qsd/random.h"

namespace qsd {

/// Largest tolerated |alpha^2 + beta^2 - 1| on input to the walk.
inline constexpr double kNormInputTolerance = 1e-6;
/// Outcomes at or below this probability cannot be conditioned on.
inline constexpr double kMinOutcomeProbability = 1e-15;

/// Real amplitudes of alpha|0> + beta|1>.
struct QubitState {
    double alpha = 1;
    double beta = 0;

    /// (cos(phi), sin(phi)).
    static QubitState from_angle(double phi);

    double norm_squared() const { return alpha * alpha + beta * beta; }
    bool operator==(const QubitState &) const = default;
};

/// Dummy-qubit count plus the quantities derived from it.
class WalkParams {
   public:
    /// mu = 0 is the strong-measurement limit (t = 1, V = sigma_x).
    explicit WalkParams(uint32_t mu = 2);

    uint32_t mu() const { return mu_; }
    uint32_t t() const { return 2 * mu_ + 1; }
    uint32_t d0() const { return mu_; }
    uint32_t d1() const { return mu_ + 1; }

    /// cos(d0*pi/2t), cos(d1*pi/2t), sin(d0*pi/2t), sin(d1*pi/2t).
    double cos_d0() const { return cos_d0_; }
    double cos_d1() const { return cos_d1_; }
    double sin_d0() const { return sin_d0_; }
    double sin_d1() const { return sin_d1_; }

   private:
    uint32_t mu_;
    double cos_d0_;
    double cos_d1_;
    double sin_d0_;
    double sin_d1_;
};

enum class Outcome : uint8_t { kZero = 0, kOne = 1 };

inline int bit(Outcome o) { return static_cast<int>(o); }

struct AxProbabilities {
    double p0 = 1;
    double p1 = 0;

    double of(Outcome o) const { return o == Outcome::kZero ? p0 : p1; }
};

/// Probabilities of reading the auxiliary qubit as 0 or 1.
/// Throws std::domain_error for a state whose norm deviates by more than
/// kNormInputTolerance.
AxProbabilities ax_probabilities(const QubitState &state, const WalkParams &params);

/// Post-measurement amplitudes. The result is divided by its own computed norm
/// rather than by sqrt(p), which keeps long walks on the unit circle.
/// Throws std::domain_error when the outcome's probability is at or below
/// kMinOutcomeProbability.
QubitState collapse_update(const QubitState &state, Outcome outcome, const WalkParams &params);

/// Outcome 0 iff draw < p0.
inline Outcome sample_outcome(const AxProbabilities &probs, double draw) {
    return draw < probs.p0 ? Outcome::kZero : Outcome::kOne;
}

/// One measurement round: consumes exactly one uniform draw.
template <UniformSource R>
std::pair<Outcome, QubitState> weak_step(const QubitState &state, const WalkParams &params, R &rng) {
    AxProbabilities probs = ax_probabilities(state, params);
    Outcome outcome = sample_outcome(probs, rng.uniform());
    return {outcome, collapse_update(state, outcome, params)};
}

}  // namespace qsd

#endif  // QSD_WALK_H
