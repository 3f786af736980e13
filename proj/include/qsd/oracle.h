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

// Dense statevector model of the full weak-measurement register:
//
//     psi, dummy_1 .. dummy_mu, ax
//
// with psi the most significant bit of a basis index and ax the least
// significant. Every controlled partial negation is applied gate by gate, so
// this is an independent check on the closed-form walk in walk.h, and it keeps
// the complex phases that the closed form drops.

#ifndef QSD_ORACLE_H
#define QSD_ORACLE_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsd/discriminator.h"
#include "qsd/gate_algebra.h"
#include "qsd/walk.h"

namespace qsd {

inline constexpr uint32_t kMaxOracleDummies = 20;
/// Entanglement entropy (nats) of the psi marginal above which the register
/// is not a product state.
inline constexpr double kProductStateEntropyTolerance = 1e-9;
/// Below this modulus an amplitude has no meaningful phase.
inline constexpr double kPhaseModulusFloor = 1e-12;

class RegisterState {
   public:
    RegisterState(uint32_t mu, std::vector<Complex> amplitudes);

    uint32_t mu() const { return mu_; }
    uint32_t num_qubits() const { return mu_ + 2; }
    size_t size() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    Complex operator[](size_t index) const { return amplitudes_[index]; }

    /// Bit mask of the psi qubit within a basis index.
    size_t psi_mask() const { return size_t{1} << (mu_ + 1); }
    /// Bit mask of the j-th dummy (1-based) within a basis index.
    size_t dummy_mask(uint32_t j) const { return size_t{1} << (mu_ + 1 - j); }
    static constexpr size_t ax_mask() { return 1; }

    /// Basis index of (psi, dummies, ax) with every dummy set.
    size_t index_of(int psi_bit, int ax_bit) const;

    double norm_squared() const;

   private:
    uint32_t mu_;
    std::vector<Complex> amplitudes_;
};

/// psi carries `state`, every dummy is |1>, ax is |0>.
/// Throws std::invalid_argument when mu > kMaxOracleDummies.
RegisterState prepare_register(const QubitState &state, uint32_t mu);
RegisterState prepare_register(StateLabel label, uint32_t mu);

/// Applies controlled-V(t) from psi and from each dummy onto ax.
RegisterState apply_p(RegisterState reg, uint32_t t);

/// Probabilities of ax = 0 and ax = 1.
AxProbabilities ax_marginal(const RegisterState &reg);

/// Projects ax onto `outcome`, renormalizes, then relabels ax back to |0>.
/// Throws std::domain_error when the outcome has probability at or below
/// kMinOutcomeProbability.
RegisterState project_ax(RegisterState reg, Outcome outcome);

/// Hadamard on the psi qubit.
RegisterState apply_hadamard_psi(RegisterState reg);

/// Reduced 2x2 density matrix of psi, entries (rho00, rho01, rho11).
struct PsiDensity {
    double rho00 = 0;
    Complex rho01;
    double rho11 = 0;

    double entropy() const;
};
PsiDensity psi_density(const RegisterState &reg);

/// (|alpha|, |beta|) of the psi qubit. Throws std::logic_error when psi is
/// entangled with the rest of the register, which would mean the circuit was
/// wired incorrectly.
std::pair<double, double> psi_moduli(const RegisterState &reg);

/// arg(beta) - arg(alpha) of psi, wrapped into (-pi, pi]. Throws
/// std::domain_error when either modulus is below kPhaseModulusFloor.
double relative_phase(const RegisterState &reg);

/// One full measurement round on the register: P, then a sharp measurement of
/// ax decided by `draw` (outcome 0 iff draw < p0), then the ax reset.
struct OracleStep {
    Outcome outcome;
    AxProbabilities probabilities;
    RegisterState next;
};
OracleStep oracle_step(RegisterState reg, double draw);

/// Drives the register through `outcomes`, recording the ax marginal before
/// each projection and the psi moduli after it.
struct OracleTraceRow {
    AxProbabilities probabilities;
    double abs_alpha = 0;
    double abs_beta = 0;
    double relative_phase = 0;
};
std::vector<OracleTraceRow> oracle_replay(const QubitState &start, uint32_t mu, std::span<const Outcome> outcomes);

}  // namespace qsd

#endif  // QSD_ORACLE_H
