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

#include "qsd/oracle.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qsd {

namespace {

void require_mu(uint32_t mu) {
    if (mu > kMaxOracleDummies) {
        throw std::invalid_argument(
            "register supports at most " + std::to_string(kMaxOracleDummies) + " dummy qubits, got " +
            std::to_string(mu));
    }
}

// Applies `u` to ax on the subspace where `control_mask` is set.
void apply_controlled_on_ax(std::span<Complex> amps, size_t control_mask, const Unitary2 &u) {
    for (size_t i = 0; i < amps.size(); i += 2) {
        if ((i & control_mask) == 0) {
            continue;
        }
        auto [a0, a1] = u.apply(amps[i], amps[i + 1]);
        amps[i] = a0;
        amps[i + 1] = a1;
    }
}

double wrap_angle(double x) {
    double w = std::remainder(x, 2 * std::numbers::pi);
    return w <= -std::numbers::pi ? w + 2 * std::numbers::pi : w;
}

}  // namespace

RegisterState::RegisterState(uint32_t mu, std::vector<Complex> amplitudes) : mu_(mu), amplitudes_(std::move(amplitudes)) {
    require_mu(mu);
    if (amplitudes_.size() != size_t{1} << num_qubits()) {
        throw std::invalid_argument("register amplitude count must be 2^(mu+2)");
    }
}

size_t RegisterState::index_of(int psi_bit, int ax_bit) const {
    size_t dummies = (psi_mask() - 1) & ~ax_mask();
    return (psi_bit ? psi_mask() : 0) | dummies | (ax_bit ? ax_mask() : 0);
}

double RegisterState::norm_squared() const {
    double total = 0;
    for (const Complex &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

RegisterState prepare_register(const QubitState &state, uint32_t mu) {
    require_mu(mu);
    RegisterState reg(mu, std::vector<Complex>(size_t{1} << (mu + 2)));
    reg.amplitudes()[reg.index_of(0, 0)] = state.alpha;
    reg.amplitudes()[reg.index_of(1, 0)] = state.beta;
    return reg;
}

RegisterState prepare_register(StateLabel label, uint32_t mu) {
    return prepare_register(canonical_state(label), mu);
}

RegisterState apply_p(RegisterState reg, uint32_t t) {
    Unitary2 v = v_root(t);
    apply_controlled_on_ax(reg.amplitudes(), reg.psi_mask(), v);
    for (uint32_t j = 1; j <= reg.mu(); j++) {
        apply_controlled_on_ax(reg.amplitudes(), reg.dummy_mask(j), v);
    }
    return reg;
}

AxProbabilities ax_marginal(const RegisterState &reg) {
    AxProbabilities p{0, 0};
    auto amps = reg.amplitudes();
    for (size_t i = 0; i < amps.size(); i += 2) {
        p.p0 += std::norm(amps[i]);
        p.p1 += std::norm(amps[i + 1]);
    }
    return p;
}

RegisterState project_ax(RegisterState reg, Outcome outcome) {
    AxProbabilities p = ax_marginal(reg);
    double kept = p.of(outcome);
    if (kept <= kMinOutcomeProbability) {
        throw std::domain_error(
            "cannot project ax onto " + std::to_string(bit(outcome)) + " with probability " + std::to_string(kept));
    }
    double scale = 1 / std::sqrt(kept);
    auto amps = reg.amplitudes();
    size_t keep_offset = outcome == Outcome::kZero ? 0 : 1;
    for (size_t i = 0; i < amps.size(); i += 2) {
        Complex survivor = amps[i + keep_offset] * scale;
        amps[i] = survivor;
        amps[i + 1] = 0;
    }
    return reg;
}

RegisterState apply_hadamard_psi(RegisterState reg) {
    Unitary2 h = hadamard();
    auto amps = reg.amplitudes();
    size_t psi = reg.psi_mask();
    for (size_t i = 0; i < psi; i++) {
        auto [a0, a1] = h.apply(amps[i], amps[i | psi]);
        amps[i] = a0;
        amps[i | psi] = a1;
    }
    return reg;
}

double PsiDensity::entropy() const {
    double trace = rho00 + rho11;
    double gap = std::sqrt((rho00 - rho11) * (rho00 - rho11) + 4 * std::norm(rho01));
    double total = 0;
    for (double lambda : {(trace + gap) / 2, (trace - gap) / 2}) {
        if (lambda > 0) {
            total -= lambda * std::log(lambda);
        }
    }
    return total;
}

PsiDensity psi_density(const RegisterState &reg) {
    PsiDensity rho;
    auto amps = reg.amplitudes();
    size_t psi = reg.psi_mask();
    for (size_t rest = 0; rest < psi; rest++) {
        Complex a0 = amps[rest];
        Complex a1 = amps[rest | psi];
        rho.rho00 += std::norm(a0);
        rho.rho11 += std::norm(a1);
        rho.rho01 += a0 * std::conj(a1);
    }
    return rho;
}

std::pair<double, double> psi_moduli(const RegisterState &reg) {
    PsiDensity rho = psi_density(reg);
    double s = rho.entropy();
    if (s > kProductStateEntropyTolerance) {
        throw std::logic_error("psi is entangled with the register (entropy " + std::to_string(s) + ")");
    }
    return {std::sqrt(rho.rho00), std::sqrt(rho.rho11)};
}

double relative_phase(const RegisterState &reg) {
    auto [abs_alpha, abs_beta] = psi_moduli(reg);
    if (abs_alpha < kPhaseModulusFloor || abs_beta < kPhaseModulusFloor) {
        throw std::domain_error("relative phase is undefined when an amplitude vanishes");
    }
    // Product state: any populated configuration of the other qubits carries
    // the psi amplitudes up to a common factor.
    auto amps = reg.amplitudes();
    size_t psi = reg.psi_mask();
    size_t best = 0;
    double best_weight = -1;
    for (size_t rest = 0; rest < psi; rest++) {
        double w = std::norm(amps[rest]) + std::norm(amps[rest | psi]);
        if (w > best_weight) {
            best_weight = w;
            best = rest;
        }
    }
    return wrap_angle(std::arg(amps[best | psi]) - std::arg(amps[best]));
}

OracleStep oracle_step(RegisterState reg, double draw) {
    uint32_t t = 2 * reg.mu() + 1;
    RegisterState entangled = apply_p(std::move(reg), t);
    AxProbabilities p = ax_marginal(entangled);
    Outcome outcome = sample_outcome(p, draw);
    return {outcome, p, project_ax(std::move(entangled), outcome)};
}

std::vector<OracleTraceRow> oracle_replay(const QubitState &start, uint32_t mu, std::span<const Outcome> outcomes) {
    std::vector<OracleTraceRow> rows;
    rows.reserve(outcomes.size());
    RegisterState reg = prepare_register(start, mu);
    uint32_t t = 2 * mu + 1;
    for (Outcome o : outcomes) {
        reg = apply_p(std::move(reg), t);
        OracleTraceRow row;
        row.probabilities = ax_marginal(reg);
        reg = project_ax(std::move(reg), o);
        std::tie(row.abs_alpha, row.abs_beta) = psi_moduli(reg);
        row.relative_phase = row.abs_alpha < kPhaseModulusFloor || row.abs_beta < kPhaseModulusFloor
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : relative_phase(reg);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qsd
