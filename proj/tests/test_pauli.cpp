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

#include <gtest/gtest.h>

#include "testing.hpp"
#include "vbsq/pauli.hpp"

namespace vbsq {
namespace {

using testing::error_of;

TEST(PauliString, ParseAndPrint) {
    PauliString p = PauliString::parse("-XZIY");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.letter(0), 'X');
    EXPECT_EQ(p.letter(3), 'Y');
    EXPECT_TRUE(p.x(3) && p.z(3));
    EXPECT_EQ(p.str(), "-XZIY");
    EXPECT_EQ(PauliString::parse("+iZ").phase(), 1);
    EXPECT_EQ(PauliString::parse("-iZ").phase(), 3);
    EXPECT_EQ(PauliString::single(3, 1, 'Z').str(), "+IZI");
    EXPECT_EQ(PauliString::parse("XYZ").weight(), 3u);
    EXPECT_TRUE(PauliString(5).is_identity());
}

TEST(PauliString, Products) {
    // XY = iZ, YX = -iZ
    EXPECT_EQ((PauliString::parse("X") * PauliString::parse("Y")).str(), "+iZ");
    EXPECT_EQ((PauliString::parse("Y") * PauliString::parse("X")).str(), "-iZ");
    EXPECT_EQ((PauliString::parse("XZ") * PauliString::parse("ZX")).str(), "+YY");
    EXPECT_EQ((PauliString::parse("Z") * PauliString::parse("Z")).str(), "+I");
}

TEST(PauliString, Commutation) {
    EXPECT_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZI")));
    EXPECT_TRUE(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
    EXPECT_TRUE(PauliString::parse("XZ").commutes_with(PauliString::parse("ZX")));
}

// Conjugation rules against dense matrices: C P C^dag.
Eigen::Matrix2cd dense(const Mat2 &m) {
    Eigen::Matrix2cd r;
    r << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
    return r;
}

Eigen::Matrix2cd dense_single(const PauliString &p) {
    const char c = p.letter(0);
    Mat2 m = c == 'X' ? gates::pauli_x() : c == 'Y' ? gates::pauli_y() : c == 'Z' ? gates::pauli_z() : gates::identity();
    return dense(m) * std::pow(Complex(0, 1), p.phase());
}

TEST(PauliString, SingleQubitConjugations) {
    struct Case {
        Mat2 gate;
        void (PauliString::*fn)(std::size_t);
    };
    const std::vector<Case> cases{{gates::hadamard(), &PauliString::conjugate_h},
                                  {gates::phase_s(), &PauliString::conjugate_s},
                                  {gates::phase_sdg(), &PauliString::conjugate_sdg},
                                  {gates::pauli_x(), &PauliString::conjugate_x},
                                  {gates::pauli_y(), &PauliString::conjugate_y},
                                  {gates::pauli_z(), &PauliString::conjugate_z}};
    for (const auto &c : cases) {
        for (const char *s : {"X", "Y", "Z", "-X", "-Y", "-Z"}) {
            PauliString p = PauliString::parse(s);
            const Eigen::Matrix2cd want = dense(c.gate) * dense_single(p) * dense(c.gate).adjoint();
            (p.*c.fn)(0);
            EXPECT_LT((dense_single(p) - want).norm(), 1e-12) << s;
        }
    }
}

TEST(PauliString, TwoQubitConjugations) {
    // CZ maps X_0 -> X_0 Z_1; CNOT(0->1) maps X_0 -> X_0 X_1 and Z_1 -> Z_0 Z_1.
    PauliString p = PauliString::parse("XI");
    p.conjugate_cz(0, 1);
    EXPECT_EQ(p.str(), "+XZ");
    p.conjugate_cz(0, 1);
    EXPECT_EQ(p.str(), "+XI");
    PauliString y = PauliString::parse("YY");
    y.conjugate_cz(0, 1);
    EXPECT_EQ(y.str(), "+XX");
    PauliString q = PauliString::parse("XI");
    q.conjugate_cnot(0, 1);
    EXPECT_EQ(q.str(), "+XX");
    PauliString r = PauliString::parse("IZ");
    r.conjugate_cnot(0, 1);
    EXPECT_EQ(r.str(), "+ZZ");
}

TEST(PauliString, ParseErrors) {
    EXPECT_EQ(error_of([] { PauliString::parse("XQ"); }), ErrorCode::ParseError);
    EXPECT_EQ(error_of([] { PauliString::single(2, 3, 'X'); }), ErrorCode::QubitOutOfRange);
}

}  // namespace
}  // namespace vbsq
