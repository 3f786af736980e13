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

#ifndef QSD_GATE_ALGEBRA_H
#define QSD_GATE_ALGEBRA_H

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace qsd {

using Complex = std::complex<double>;

/// Tolerance for identities that involve a single gate construction.
inline constexpr double kSingleOpTolerance = 1e-12;
/// Tolerance for identities built from chains of matrix products.
inline constexpr double kProductTolerance = 1e-10;

/// A 2x2 complex matrix stored row-major. Constructed only through the gate
/// factories below (or `from_entries` for tests), so every instance a caller
/// obtains from this header is unitary.
class Unitary2 {
   public:
    static Unitary2 identity();
    static Unitary2 from_entries(Complex m00, Complex m01, Complex m10, Complex m11);

    Complex operator()(int row, int col) const {
        return entries_[static_cast<size_t>(2 * row + col)];
    }

    Unitary2 operator*(const Unitary2 &rhs) const;
    Unitary2 scaled(Complex factor) const;
    Unitary2 adjoint() const;
    Complex determinant() const;

    /// Applies the matrix to the column vector (a0, a1).
    std::pair<Complex, Complex> apply(Complex a0, Complex a1) const;

    /// Largest elementwise modulus of (this - other).
    double max_abs_diff(const Unitary2 &other) const;
    bool approx_equal(const Unitary2 &other, double tolerance) const {
        return max_abs_diff(other) <= tolerance;
    }

   private:
    std::array<Complex, 4> entries_{};
};

/// k^d where k = exp(i*pi/t) is the principal t-th root of -1.
///
/// The value is always evaluated from the angle d*pi/t, never by repeated
/// multiplication, so large powers do not accumulate rounding drift.
class PhaseRoot {
   public:
    /// Throws std::invalid_argument when t == 0.
    PhaseRoot(uint32_t t, uint32_t d);

    uint32_t t() const { return t_; }
    uint32_t d() const { return d_; }

    /// d*pi/t.
    double angle() const;
    Complex value() const;

    /// (1 + k^d)/2, the amplitude left on |0> of the target. Its modulus is
    /// cos(d*pi/2t) and its argument is d*pi/2t.
    Complex half_sum() const;
    /// (1 - k^d)/2. Modulus sin(d*pi/2t), argument d*pi/2t - pi/2.
    Complex half_difference() const;

    /// |(1 + k^d)/2|^2 = cos^2(d*pi/2t).
    double stay_probability() const;
    /// |(1 - k^d)/2|^2 = sin^2(d*pi/2t).
    double flip_probability() const;

   private:
    uint32_t t_;
    uint32_t d_;
};

/// Pauli X, the NOT gate.
Unitary2 sigma_x();

/// cos(theta/2) I - i sin(theta/2) X. Throws std::invalid_argument on a
/// non-finite angle.
Unitary2 rx(double theta);

/// V, the t-th root of sigma_x: (1/2)[[1+k, 1-k], [1-k, 1+k]] with k = exp(i*pi/t).
/// Throws std::invalid_argument for t == 0.
Unitary2 v_root(uint32_t t);

/// V^d in closed form. Throws std::invalid_argument for t == 0.
Unitary2 v_power(uint32_t t, uint32_t d);

Unitary2 hadamard();

}  // namespace qsd

#endif  // QSD_GATE_ALGEBRA_H
