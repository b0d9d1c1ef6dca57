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

#include "vbsq/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace vbsq {

Mat2 operator*(const Mat2 &a, const Mat2 &b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    }
    return r;
}

Mat2 operator*(Complex s, const Mat2 &a) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
    return r;
}

Mat2 dagger(const Mat2 &a) {
    return Mat2{{std::conj(a.m[0]), std::conj(a.m[2]), std::conj(a.m[1]), std::conj(a.m[3])}};
}

Complex det(const Mat2 &a) { return a.m[0] * a.m[3] - a.m[1] * a.m[2]; }

double max_abs_diff(const Mat2 &a, const Mat2 &b) {
    double d = 0;
    for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
    return d;
}

bool is_unitary(const Mat2 &u, double tol) {
    for (const auto &z : u.m) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return max_abs_diff(dagger(u) * u, gates::identity()) <= tol;
}

bool equal_up_to_phase(const Mat2 &a, const Mat2 &b, double tol) {
    // Align on the largest entry of b.
    int k = 0;
    for (int i = 1; i < 4; ++i) {
        if (std::abs(b.m[i]) > std::abs(b.m[k])) k = i;
    }
    if (std::abs(b.m[k]) < tol) return max_abs_diff(a, b) <= tol;
    Complex ratio = a.m[k] / b.m[k];
    if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
    return max_abs_diff(a, ratio * b) <= tol;
}

namespace gates {

Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }
Mat2 pauli_x() { return Mat2{{0, 1, 1, 0}}; }
Mat2 pauli_y() { return Mat2{{0, Complex(0, -1), Complex(0, 1), 0}}; }
Mat2 pauli_z() { return Mat2{{1, 0, 0, -1}}; }

Mat2 pauli(int alpha) {
    switch (alpha & 3) {
        case 0: return identity();
        case 1: return pauli_x();
        case 2: return pauli_y();
        default: return pauli_z();
    }
}

Mat2 hadamard() { return Mat2{{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}}; }
Mat2 phase_s() { return Mat2{{1, 0, 0, Complex(0, 1)}}; }
Mat2 phase_sdg() { return Mat2{{1, 0, 0, Complex(0, -1)}}; }
Mat2 phase(double theta) { return Mat2{{1, 0, 0, std::polar(1.0, theta)}}; }

Mat2 rx(double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Mat2{{c, Complex(0, -s), Complex(0, -s), c}};
}

Mat2 rz(double theta) { return Mat2{{std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)}}; }

}  // namespace gates

Mat2 pauli_matrix(PauliBits p) {
    Mat2 m = gates::identity();
    if (p.z) m = gates::pauli_z() * m;
    if (p.x) m = gates::pauli_x() * m;
    return m;
}

int pauli_index(PauliBits p) {
    if (p.x && p.z) return 2;
    if (p.x) return 1;
    if (p.z) return 3;
    return 0;
}

PauliBits pauli_bits(int alpha) {
    switch (alpha & 3) {
        case 0: return {false, false};
        case 1: return {true, false};
        case 2: return {true, true};
        default: return {false, true};
    }
}

std::optional<std::array<PauliBits, 2>> clifford_images(const Mat2 &u, double tol) {
    std::array<PauliBits, 2> images{};
    const Mat2 generators[2] = {gates::pauli_x(), gates::pauli_z()};
    for (int g = 0; g < 2; ++g) {
        Mat2 image = u * generators[g] * dagger(u);
        bool found = false;
        for (int alpha = 1; alpha < 4 && !found; ++alpha) {
            if (equal_up_to_phase(image, gates::pauli(alpha), tol)) {
                images[g] = pauli_bits(alpha);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return images;
}

}  // namespace vbsq
