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

#include "qsd/gate_algebra.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsd {

namespace {

void require_root_order(uint32_t t) {
    if (t == 0) {
        throw std::invalid_argument("root order t must be >= 1");
    }
}

}  // namespace

Unitary2 Unitary2::identity() {
    return from_entries(1.0, 0.0, 0.0, 1.0);
}

Unitary2 Unitary2::from_entries(Complex m00, Complex m01, Complex m10, Complex m11) {
    Unitary2 u;
    u.entries_ = {m00, m01, m10, m11};
    return u;
}

Unitary2 Unitary2::operator*(const Unitary2 &rhs) const {
    const Unitary2 &lhs = *this;
    return from_entries(
        lhs(0, 0) * rhs(0, 0) + lhs(0, 1) * rhs(1, 0),
        lhs(0, 0) * rhs(0, 1) + lhs(0, 1) * rhs(1, 1),
        lhs(1, 0) * rhs(0, 0) + lhs(1, 1) * rhs(1, 0),
        lhs(1, 0) * rhs(0, 1) + lhs(1, 1) * rhs(1, 1));
}

Unitary2 Unitary2::scaled(Complex factor) const {
    Unitary2 out = *this;
    for (auto &e : out.entries_) {
        e *= factor;
    }
    return out;
}

Unitary2 Unitary2::adjoint() const {
    const Unitary2 &m = *this;
    return from_entries(std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)), std::conj(m(1, 1)));
}

Complex Unitary2::determinant() const {
    const Unitary2 &m = *this;
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

std::pair<Complex, Complex> Unitary2::apply(Complex a0, Complex a1) const {
    const Unitary2 &m = *this;
    return {m(0, 0) * a0 + m(0, 1) * a1, m(1, 0) * a0 + m(1, 1) * a1};
}

double Unitary2::max_abs_diff(const Unitary2 &other) const {
    double worst = 0;
    for (size_t i = 0; i < entries_.size(); i++) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

PhaseRoot::PhaseRoot(uint32_t t, uint32_t d) : t_(t), d_(d) {
    require_root_order(t);
}

double PhaseRoot::angle() const {
    return std::numbers::pi * static_cast<double>(d_) / static_cast<double>(t_);
}

Complex PhaseRoot::value() const {
    return std::polar(1.0, angle());
}

Complex PhaseRoot::half_sum() const {
    return (1.0 + value()) / 2.0;
}

Complex PhaseRoot::half_difference() const {
    return (1.0 - value()) / 2.0;
}

double PhaseRoot::stay_probability() const {
    double c = std::cos(angle() / 2);
    return c * c;
}

double PhaseRoot::flip_probability() const {
    double s = std::sin(angle() / 2);
    return s * s;
}

Unitary2 sigma_x() {
    return Unitary2::from_entries(0.0, 1.0, 1.0, 0.0);
}

Unitary2 rx(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rx angle must be finite, got " + std::to_string(theta));
    }
    double c = std::cos(theta / 2);
    Complex s{0.0, -std::sin(theta / 2)};
    return Unitary2::from_entries(c, s, s, c);
}

Unitary2 v_root(uint32_t t) {
    return v_power(t, 1);
}

Unitary2 v_power(uint32_t t, uint32_t d) {
    PhaseRoot root(t, d);
    Complex plus = root.half_sum();
    Complex minus = root.half_difference();
    return Unitary2::from_entries(plus, minus, minus, plus);
}

Unitary2 hadamard() {
    double h = std::numbers::sqrt2 / 2;
    return Unitary2::from_entries(h, h, h, -h);
}

}  // namespace qsd
