// Copyright 2026 The vbsq Authors
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

#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <optional>

namespace vbsq {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex &operator()(int r, int c) { return m[2 * r + c]; }
    const Complex &operator()(int r, int c) const { return m[2 * r + c]; }

    friend Mat2 operator*(const Mat2 &a, const Mat2 &b);
    friend Mat2 operator*(Complex s, const Mat2 &a);
    friend bool operator==(const Mat2 &, const Mat2 &) = default;
};

Mat2 dagger(const Mat2 &a);
Complex det(const Mat2 &a);

/// Max entrywise |a - b|.
double max_abs_diff(const Mat2 &a, const Mat2 &b);
bool is_unitary(const Mat2 &u, double tol = 1e-10);
/// True when a = e^{i phi} b for some phi, entrywise within tol.
bool equal_up_to_phase(const Mat2 &a, const Mat2 &b, double tol = 1e-10);

namespace gates {

Mat2 identity();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
/// sigma_alpha with alpha = 0 (identity), 1 (X), 2 (Y), 3 (Z).
Mat2 pauli(int alpha);
Mat2 hadamard();
Mat2 phase_s();
Mat2 phase_sdg();
/// diag(1, e^{i theta})
Mat2 phase(double theta);
/// exp(-i theta X / 2)
Mat2 rx(double theta);
/// exp(-i theta Z / 2)
Mat2 rz(double theta);

}  // namespace gates

/// Pauli byproduct X^x Z^z on one wire, tracked up to global phase.
struct PauliBits {
    bool x = false;
    bool z = false;

    friend bool operator==(const PauliBits &, const PauliBits &) = default;
    PauliBits &operator^=(const PauliBits &o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
};

/// X^x Z^z as a matrix.
Mat2 pauli_matrix(PauliBits p);
/// Index alpha in {0: I, 1: X, 2: Y, 3: Z} of the Pauli X^x Z^z (Y ~ XZ).
int pauli_index(PauliBits p);
PauliBits pauli_bits(int alpha);

/// If U P U^dagger is proportional to a Pauli for P in {X, Z}, returns the
/// images (x image, z image); otherwise nullopt (U is not Clifford).
std::optional<std::array<PauliBits, 2>> clifford_images(const Mat2 &u, double tol = 1e-9);

}  // namespace vbsq
