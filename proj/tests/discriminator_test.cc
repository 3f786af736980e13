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
#include <vector>

#include "exact_enumeration.h"
#include "gtest/gtest.h"
#include "qsd/random.h"

using namespace qsd;

namespace {

const double kH = 1 / std::sqrt(2.0);

struct ScriptedSource {
    std::vector<double> draws;
    size_t next = 0;
    double uniform() { return draws.at(next++); }
};

// Wraps a stream and remembers every draw it hands out.
struct RecordingSource {
    SplitMix64 inner;
    std::vector<double> seen;
    double uniform() {
        seen.push_back(inner.uniform());
        return seen.back();
    }
};

}  // namespace

TEST(discriminator, alpha_approx_ratio) {
    EXPECT_EQ(alpha_approx({2, 0}), 1.0);
    EXPECT_EQ(alpha_approx({1, 1}), 0.5);
    EXPECT_DOUBLE_EQ(alpha_approx({55, 45}), 0.55);
    EXPECT_THROW(alpha_approx({0, 0}), std::domain_error);
}

TEST(discriminator, hadamard_update_examples) {
    QubitState a = apply_hadamard_update({kH, kH});
    EXPECT_NEAR(a.alpha, 1, 1e-12);
    EXPECT_NEAR(a.beta, 0, 1e-12);
    QubitState b = apply_hadamard_update({1, 0});
    EXPECT_NEAR(b.alpha, kH, 1e-12);
    EXPECT_NEAR(b.beta, kH, 1e-12);
    QubitState c = apply_hadamard_update({kH, -kH});
    EXPECT_NEAR(c.alpha, 0, 1e-12);
    EXPECT_NEAR(c.beta, 1, 1e-12);
    QubitState d = apply_hadamard_update(QubitState::from_angle(0.3));
    EXPECT_NEAR(d.norm_squared(), 1, 1e-12);
}

TEST(discriminator, classify_examples) {
    Classification a = classify({60, 40}, false);
    EXPECT_EQ(a.label, StateLabel::kZero);
    EXPECT_FALSE(a.tie);
    EXPECT_EQ(classify({10, 90}, true).label, StateLabel::kMinus);
    EXPECT_EQ(classify({90, 10}, true).label, StateLabel::kPlus);
    EXPECT_EQ(classify({10, 90}, false).label, StateLabel::kOne);
    Classification tie = classify({50, 50}, false);
    EXPECT_EQ(tie.label, StateLabel::kZero);
    EXPECT_TRUE(tie.tie);
    Classification tie_h = classify({50, 50}, true);
    EXPECT_EQ(tie_h.label, StateLabel::kPlus);
    EXPECT_TRUE(tie_h.tie);
}

TEST(discriminator, labels_round_trip_and_encode_bits) {
    for (StateLabel s : kAllStates) {
        EXPECT_EQ(parse_state_label(to_string(s)), s);
        EXPECT_NEAR(canonical_state(s).norm_squared(), 1, 1e-15);
    }
    EXPECT_FALSE(parse_state_label("PLUS").has_value());
    EXPECT_EQ(encoded_bit(StateLabel::kZero), 0);
    EXPECT_EQ(encoded_bit(StateLabel::kPlus), 0);
    EXPECT_EQ(encoded_bit(StateLabel::kOne), 1);
    EXPECT_EQ(encoded_bit(StateLabel::kMinus), 1);
    EXPECT_EQ(basis_of(StateLabel::kMinus), Basis::kHadamard);
    EXPECT_EQ(parse_decision_mode("never-apply-h"), DecisionMode::kNeverApplyH);
    EXPECT_FALSE(parse_decision_mode("sometimes").has_value());
}

TEST(discriminator, rule_validation) {
    DecisionRule rule;
    EXPECT_NO_THROW(rule.validate());
    rule.i1 = 0.6;
    rule.i2 = 0.4;
    EXPECT_THROW(rule.validate(), std::invalid_argument);
    rule.mode = DecisionMode::kAlwaysApplyH;
    EXPECT_NO_THROW(rule.validate());
    rule.k = 0;
    EXPECT_THROW(rule.validate(), std::invalid_argument);

    SplitMix64 rng(1);
    DecisionRule late;
    late.k = 200;
    EXPECT_THROW(run_trial(StateLabel::kPlus, WalkParams(2), late, 100, rng), std::invalid_argument);
    EXPECT_THROW(run_trial(StateLabel::kPlus, WalkParams(2), DecisionRule{}, 0, rng), std::invalid_argument);
}

TEST(discriminator, interval_test_is_strict) {
    DecisionRule rule;
    EXPECT_FALSE(rule.triggers(0.0));
    EXPECT_FALSE(rule.triggers(1.0));
    EXPECT_TRUE(rule.triggers(0.5));
    rule.i1 = 0.5;
    EXPECT_FALSE(rule.triggers(0.5));
}

TEST(discriminator, decision_happens_after_counter_update) {
    // plus, mu = 2: draws 0.3 then 0.9 give outcomes 0 then 1, alpha_approx
    // 0.5 at k = 2, so H maps the restored |+> onto |0>.
    std::vector<double> draws = {0.3, 0.9};
    for (int i = 0; i < 8; i++) {
        draws.push_back(0.1);
    }
    ScriptedSource src{draws};
    TrialOutcome t = run_trial(StateLabel::kPlus, WalkParams(2), DecisionRule{}, 10, src);
    ASSERT_EQ(t.trace.size(), 10u);
    EXPECT_FALSE(t.trace[0].h_applied);
    EXPECT_TRUE(t.trace[1].h_applied);
    EXPECT_EQ(t.trace[1].alpha_approx, 0.5);
    EXPECT_NEAR(t.trace[1].alpha, 1, 1e-12);
    EXPECT_NEAR(t.trace[1].beta, 0, 1e-12);
    EXPECT_TRUE(t.h_applied);
    EXPECT_EQ(t.decided_basis, Basis::kHadamard);
    EXPECT_EQ(t.decided_state, StateLabel::kPlus);
    EXPECT_EQ(t.counters, (WalkCounters{9, 1}));
    EXPECT_EQ(src.next, 10u);
}

TEST(discriminator, never_mode_recovers_computational_states) {
    DecisionRule never;
    never.mode = DecisionMode::kNeverApplyH;
    for (StateLabel s : {StateLabel::kZero, StateLabel::kOne}) {
        int correct = 0;
        for (uint64_t i = 0; i < 1000; i++) {
            SplitMix64 rng(trial_seed(3, i));
            TrialOutcome t = run_trial(s, WalkParams(1), never, 100, rng, TraceMode::kSkip);
            EXPECT_FALSE(t.h_applied);
            EXPECT_EQ(t.decided_basis, Basis::kComputational);
            correct += t.decided_state == s;
        }
        EXPECT_GE(correct, 999) << to_string(s);
    }
}

TEST(discriminator, h_probability_at_k2_matches_enumeration) {
    // Both values are 2 cos^2(pi/5) sin^2(pi/5) = 0.45225424859...
    const double exact = 2 * std::pow(std::cos(std::numbers::pi / 5) * std::sin(std::numbers::pi / 5), 2);
    for (StateLabel s : {StateLabel::kPlus, StateLabel::kZero}) {
        int label = s == StateLabel::kPlus ? 2 : 0;
        double enumerated =
            qsd::testing::exact_trial_stats(label, 2, 100, 2, qsd::testing::ExactMode::kInterval).p_h_applied;
        EXPECT_NEAR(enumerated, exact, 1e-12);
        EXPECT_NEAR(enumerated, 0.4522, 1e-4);
        const int n = 20000;
        int fired = 0;
        for (uint64_t i = 0; i < n; i++) {
            SplitMix64 rng(trial_seed(17, i));
            fired += run_trial(s, WalkParams(2), DecisionRule{}, 100, rng, TraceMode::kSkip).h_applied;
        }
        EXPECT_NEAR(static_cast<double>(fired) / n, exact, qsd::testing::binomial_3sigma(exact, n)) << to_string(s);
    }
}

TEST(discriminator, trial_invariants) {
    SplitMix64 master(99);
    for (int c = 0; c < 400; c++) {
        StateLabel s = kAllStates[c % 4];
        uint32_t mu = static_cast<uint32_t>(master.uniform() * 5);
        uint32_t r = 2 + static_cast<uint32_t>(master.uniform() * 120);
        uint64_t seed = master.next();

        RecordingSource a{SplitMix64(seed), {}};
        RecordingSource b{SplitMix64(seed), {}};
        TrialOutcome ta = run_trial(s, WalkParams(mu), DecisionRule{}, r, a);
        TrialOutcome tb = run_trial(s, WalkParams(mu), DecisionRule{}, r, b);
        ASSERT_EQ(ta, tb);
        EXPECT_EQ(a.seen.size(), r);

        EXPECT_EQ(ta.counters.total(), r);
        EXPECT_EQ(ta.trace.size(), r);
        EXPECT_EQ(ta.decided_basis == Basis::kHadamard, ta.h_applied);
        EXPECT_EQ(basis_of(ta.decided_state), ta.decided_basis);
        EXPECT_EQ(ta.tie, ta.counters.j0 == ta.counters.j1);
        // k = 2 with (0,1): H iff the first two outcomes differ.
        EXPECT_EQ(ta.h_applied, ta.trace[0].outcome != ta.trace[1].outcome);
        for (const TraceRow &row : ta.trace) {
            EXPECT_NEAR(row.alpha * row.alpha + row.beta * row.beta, 1, 1e-10);
            EXPECT_EQ(row.j0 + row.j1, row.iteration);
        }
        if (mu > 0 && ta.h_applied && (s == StateLabel::kZero || s == StateLabel::kOne)) {
            // Basis states do not move before the decision, so H starts the
            // remaining walk from |+> or |->.
            EXPECT_NEAR(ta.trace[1].alpha, kH, 1e-12);
            EXPECT_NEAR(ta.trace[1].beta, s == StateLabel::kZero ? kH : -kH, 1e-12);
        }
    }
}

TEST(discriminator, never_mode_leaves_basis_computational) {
    DecisionRule never;
    never.mode = DecisionMode::kNeverApplyH;
    DecisionRule always;
    always.mode = DecisionMode::kAlwaysApplyH;
    for (uint64_t i = 0; i < 200; i++) {
        SplitMix64 r1(i), r2(i);
        TrialOutcome n = run_trial(kAllStates[i % 4], WalkParams(2), never, 50, r1);
        TrialOutcome a = run_trial(kAllStates[i % 4], WalkParams(2), always, 50, r2);
        EXPECT_FALSE(n.h_applied);
        EXPECT_EQ(n.decided_basis, Basis::kComputational);
        EXPECT_TRUE(a.h_applied);
        EXPECT_EQ(a.decided_basis, Basis::kHadamard);
    }
}

TEST(discriminator, skipping_the_trace_does_not_change_the_decision) {
    for (uint64_t i = 0; i < 100; i++) {
        SplitMix64 r1(i), r2(i);
        TrialOutcome full = run_trial(StateLabel::kMinus, WalkParams(3), DecisionRule{}, 60, r1);
        TrialOutcome lean = run_trial(StateLabel::kMinus, WalkParams(3), DecisionRule{}, 60, r2, TraceMode::kSkip);
        EXPECT_TRUE(lean.trace.empty());
        full.trace.clear();
        EXPECT_EQ(full, lean);
    }
}
