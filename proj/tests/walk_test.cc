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
#include <vector>

#include "gtest/gtest.h"
#include "qsd/random.h"

using namespace qsd;

namespace {

constexpr double kPi = std::numbers::pi;
const double kH = 1 / std::sqrt(2.0);

// Replays a fixed list of draws.
struct ScriptedSource {
    std::vector<double> draws;
    size_t next = 0;
    double uniform() { return draws.at(next++); }
};

}  // namespace

TEST(random, splitmix64_reference_stream) {
    SplitMix64 rng(1234567);
    EXPECT_EQ(rng.next(), 6457827717110365317ULL);
    EXPECT_EQ(rng.next(), 3203168211198807973ULL);
    EXPECT_EQ(rng.next(), 9817491932198370423ULL);
    EXPECT_EQ(rng.next(), 4593380528125082431ULL);
    EXPECT_EQ(rng.next(), 16408922859458223821ULL);
}

TEST(random, uniform_uses_top_53_bits) {
    SplitMix64 a(99), b(99);
    for (int i = 0; i < 1000; i++) {
        uint64_t raw = b.next();
        double u = a.uniform();
        EXPECT_EQ(u, static_cast<double>(raw >> 11) / 9007199254740992.0);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    EXPECT_EQ(trial_seed(5, 3), SplitMix64(5 ^ 3).next());
}

TEST(walk_params, derived_quantities) {
    for (uint32_t mu = 0; mu <= 64; mu++) {
        WalkParams p(mu);
        EXPECT_EQ(p.t(), 2 * mu + 1);
        EXPECT_EQ(p.d0(), mu);
        EXPECT_EQ(p.d1(), mu + 1);
        EXPECT_NEAR(p.cos_d0() * p.cos_d0() + p.cos_d1() * p.cos_d1(), 1, 1e-12);
        EXPECT_NEAR(p.sin_d0(), p.cos_d1(), 1e-12);
    }
    EXPECT_EQ(WalkParams().mu(), 2u);
}

TEST(walk, ax_probabilities_examples) {
    EXPECT_NEAR(ax_probabilities({1, 0}, WalkParams(1)).p0, 0.75, 1e-12);
    for (uint32_t mu = 0; mu <= 10; mu++) {
        AxProbabilities p = ax_probabilities({kH, kH}, WalkParams(mu));
        EXPECT_NEAR(p.p0, 0.5, 1e-12) << mu;
        EXPECT_NEAR(p.p0 + p.p1, 1, 1e-12);
    }
    EXPECT_NEAR(ax_probabilities({1, 0}, WalkParams(2)).p0, std::pow(std::cos(kPi / 5), 2), 1e-12);
    EXPECT_NEAR(ax_probabilities({1, 0}, WalkParams(2)).p0, 0.654508, 1e-6);
}

TEST(walk, ax_probabilities_rejects_unnormalized_state) {
    EXPECT_THROW(ax_probabilities({0.9, 0.1}, WalkParams(2)), std::domain_error);
    EXPECT_THROW(ax_probabilities({0, 0}, WalkParams(2)), std::domain_error);
    EXPECT_NO_THROW(ax_probabilities({1 + 1e-8, 0}, WalkParams(2)));
}

TEST(walk, collapse_update_examples) {
    WalkParams mu2(2);
    for (Outcome o : {Outcome::kZero, Outcome::kOne}) {
        EXPECT_EQ(collapse_update({1, 0}, o, mu2), (QubitState{1, 0}));
    }
    QubitState after0 = collapse_update({kH, kH}, Outcome::kZero, mu2);
    double c36 = std::cos(kPi / 5), c54 = std::cos(3 * kPi / 10);
    EXPECT_NEAR(after0.alpha * after0.alpha, c36 * c36 / (c36 * c36 + c54 * c54), 1e-12);
    EXPECT_NEAR(after0.alpha * after0.alpha, 0.654508, 1e-6);
    QubitState back = collapse_update(after0, Outcome::kOne, mu2);
    EXPECT_NEAR(back.alpha, kH, 1e-12);
    EXPECT_NEAR(back.beta, kH, 1e-12);
}

TEST(walk, collapse_update_rejects_impossible_outcome) {
    // mu = 0 is a sharp measurement: |0> can never produce ax = 1.
    EXPECT_THROW(collapse_update({1, 0}, Outcome::kOne, WalkParams(0)), std::domain_error);
    EXPECT_THROW(collapse_update({0, 1}, Outcome::kZero, WalkParams(0)), std::domain_error);
    QubitState collapsed = collapse_update({kH, kH}, Outcome::kOne, WalkParams(0));
    EXPECT_EQ(collapsed, (QubitState{0, 1}));
}

TEST(walk, weak_step_threshold_sampling) {
    ScriptedSource src{{0.3}};
    auto [outcome, next] = weak_step({kH, kH}, WalkParams(2), src);
    EXPECT_EQ(outcome, Outcome::kZero);
    EXPECT_NEAR(next.alpha, 0.80901699437494745, 1e-12);
    EXPECT_NEAR(next.beta, 0.58778525229247314, 1e-12);
    EXPECT_EQ(src.next, 1u);

    // The threshold is strict: a draw equal to p0 yields outcome 1.
    ScriptedSource edge{{0.5}};
    EXPECT_EQ(weak_step({kH, kH}, WalkParams(2), edge).first, Outcome::kOne);

    ScriptedSource fixed{{0.0, 0.6546, 0.999}};
    for (int i = 0; i < 3; i++) {
        auto [o, s] = weak_step({1, 0}, WalkParams(2), fixed);
        EXPECT_EQ(s, (QubitState{1, 0}));
        EXPECT_EQ(o, i == 0 ? Outcome::kZero : Outcome::kOne);
    }
}

TEST(walk, weak_step_frequency_from_fixed_state) {
    SplitMix64 rng(2024);
    WalkParams p(2);
    int zeros = 0;
    const int n = 100000;
    for (int i = 0; i < n; i++) {
        zeros += weak_step({kH, kH}, p, rng).first == Outcome::kZero;
    }
    EXPECT_NEAR(static_cast<double>(zeros) / n, 0.5, 0.005);
}

TEST(walk, conditional_expectation_of_alpha_squared_is_preserved) {
    SplitMix64 rng(11);
    for (int c = 0; c < 2000; c++) {
        WalkParams p(static_cast<uint32_t>(rng.uniform() * 12));
        QubitState s = QubitState::from_angle(rng.uniform() * 2 * kPi);
        AxProbabilities probs = ax_probabilities(s, p);
        double expected = 0;
        for (Outcome o : {Outcome::kZero, Outcome::kOne}) {
            if (probs.of(o) > kMinOutcomeProbability) {
                QubitState n = collapse_update(s, o, p);
                expected += probs.of(o) * n.alpha * n.alpha;
            }
        }
        EXPECT_NEAR(expected, s.alpha * s.alpha, 1e-12);
    }
}

TEST(walk, martingale_and_normalization_over_many_walks) {
    WalkParams p(2);
    const int walks = 100000;
    double sum = 0;
    double worst_norm = 0;
    for (int w = 0; w < walks; w++) {
        SplitMix64 rng(trial_seed(77, w));
        QubitState s{kH, kH};
        for (int j = 0; j < 50; j++) {
            s = weak_step(s, p, rng).second;
            worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1));
        }
        sum += s.alpha * s.alpha;
    }
    EXPECT_NEAR(sum / walks, 0.5, 0.005);
    EXPECT_LE(worst_norm, 1e-10);
}

TEST(walk, signs_are_preserved) {
    SplitMix64 rng(5);
    for (int c = 0; c < 500; c++) {
        WalkParams p(static_cast<uint32_t>(rng.uniform() * 6));
        QubitState s = QubitState::from_angle(rng.uniform() * kPi / 2);
        for (int j = 0; j < 100; j++) {
            s = weak_step(s, p, rng).second;
            ASSERT_GE(s.alpha, 0);
            ASSERT_GE(s.beta, 0);
        }
    }
}

TEST(walk, basis_states_are_absorbing) {
    for (uint32_t mu = 1; mu <= 8; mu++) {
        WalkParams p(mu);
        for (Outcome o : {Outcome::kZero, Outcome::kOne}) {
            EXPECT_EQ(collapse_update({1, 0}, o, p), (QubitState{1, 0}));
            EXPECT_EQ(collapse_update({0, 1}, o, p), (QubitState{0, 1}));
        }
    }
}

TEST(walk, swapping_amplitudes_swaps_outcomes) {
    SplitMix64 rng(8);
    for (int c = 0; c < 300; c++) {
        WalkParams p(1 + static_cast<uint32_t>(rng.uniform() * 8));
        QubitState s = QubitState::from_angle(rng.uniform() * kPi / 2);
        QubitState mirrored{s.beta, s.alpha};
        for (int j = 0; j < 30; j++) {
            Outcome o = rng.uniform() < 0.5 ? Outcome::kZero : Outcome::kOne;
            Outcome flipped = o == Outcome::kZero ? Outcome::kOne : Outcome::kZero;
            EXPECT_NEAR(ax_probabilities(s, p).of(o), ax_probabilities(mirrored, p).of(flipped), 1e-12);
            s = collapse_update(s, o, p);
            mirrored = collapse_update(mirrored, flipped, p);
            EXPECT_NEAR(s.alpha, mirrored.beta, 1e-10);
            EXPECT_NEAR(s.beta, mirrored.alpha, 1e-10);
        }
    }
}
